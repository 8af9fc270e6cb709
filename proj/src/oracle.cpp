#include "hopfforge/oracle.hpp"

#include "hopfforge/matrix.hpp"
#include "hopfforge/qcomb.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hopfforge {

namespace {

int raw_position(Letter g) {
    int p = letter_position(g);
    if (p <= 2) return 0;  // F zone
    if (p <= 6) return 1;  // group-like zone
    return 2;              // E zone
}

struct RawTerm {
    Scalar coeff;
    std::vector<Letter> fword;  // letters F1/F2 in their surviving order
    int k[2] = {0, 0};
    int kt[2] = {0, 0};
    std::vector<Letter> eword;  // letters E1/E2 in their surviving order
};

int raw_simple_index(Letter g) {
    switch (g) {
        case Letter::E1:
        case Letter::F1: return 0;
        case Letter::E2:
        case Letter::F2: return 1;
        default: throw std::logic_error("raw_simple_index");
    }
}

// Reduce words over basic letters to the shape F-block K-block E-block using
// only the defining conjugation and commutator relations.
std::vector<RawTerm> raw_reduce(std::vector<FreeWord> work, const AlgebraId& A) {
    const FieldMode& m = A.mode;
    std::vector<RawTerm> out;
    while (!work.empty()) {
        FreeWord w = std::move(work.back());
        work.pop_back();
        if (w.coeff.is_zero()) continue;
        size_t i = 0;
        bool sorted = true;
        for (; i + 1 < w.letters.size(); ++i) {
            if (raw_position(w.letters[i]) > raw_position(w.letters[i + 1])) {
                sorted = false;
                break;
            }
        }
        if (sorted) {
            RawTerm t;
            t.coeff = w.coeff;
            for (Letter g : w.letters) {
                switch (g) {
                    case Letter::F1:
                    case Letter::F2: t.fword.push_back(g); break;
                    case Letter::E1:
                    case Letter::E2: t.eword.push_back(g); break;
                    case Letter::K1: ++t.k[0]; break;
                    case Letter::K1i: --t.k[0]; break;
                    case Letter::K2: ++t.k[1]; break;
                    case Letter::K2i: --t.k[1]; break;
                    case Letter::Kt1: ++t.kt[0]; break;
                    case Letter::Kt1i: --t.kt[0]; break;
                    case Letter::Kt2: ++t.kt[1]; break;
                    case Letter::Kt2i: --t.kt[1]; break;
                    default: throw std::logic_error("raw_reduce: composite letter survived");
                }
            }
            if (A.is_quotient()) {
                t.k[0] = static_cast<int>(mod_nonneg(t.k[0], A.l()));
                t.k[1] = static_cast<int>(mod_nonneg(t.k[1], A.l()));
                t.kt[0] = static_cast<int>(mod_nonneg(t.kt[0], A.l()));
                t.kt[1] = static_cast<int>(mod_nonneg(t.kt[1], A.l()));
            }
            out.push_back(std::move(t));
            continue;
        }
        Letter X = w.letters[i], Y = w.letters[i + 1];
        auto emit = [&](const Scalar& c, std::vector<Letter> mid) {
            FreeWord nw;
            nw.coeff = w.coeff * c;
            nw.letters.assign(w.letters.begin(), w.letters.begin() + i);
            nw.letters.insert(nw.letters.end(), mid.begin(), mid.end());
            nw.letters.insert(nw.letters.end(), w.letters.begin() + i + 2, w.letters.end());
            work.push_back(std::move(nw));
        };
        auto k_sign = [](Letter g) {
            return (g == Letter::K1i || g == Letter::K2i || g == Letter::Kt1i || g == Letter::Kt2i)
                       ? -1
                       : 1;
        };
        auto k_index = [](Letter g) {
            return (g == Letter::K1 || g == Letter::K1i || g == Letter::Kt1 || g == Letter::Kt1i)
                       ? 0
                       : 1;
        };
        if (raw_position(X) == 2 && raw_position(Y) == 1) {
            // E_j K^eps = q^(-eps a_ji) K^eps E_j
            int a = kCartan[raw_simple_index(X)][k_index(Y)];
            emit(Scalar::q_power(-k_sign(Y) * a, m), {Y, X});
        } else if (raw_position(X) == 1 && raw_position(Y) == 0) {
            // K^eps F_j = q^(-eps a_ji) F_j K^eps
            int a = kCartan[raw_simple_index(Y)][k_index(X)];
            emit(Scalar::q_power(-k_sign(X) * a, m), {Y, X});
        } else if (raw_position(X) == 2 && raw_position(Y) == 0) {
            emit(Scalar::one(m), {Y, X});
            if (X == Letter::E1 && Y == Letter::F1) {
                Scalar inv_qq = (Scalar::q_power(1, m) - Scalar::q_power(-1, m)).inverse();
                emit(inv_qq, {Letter::K1});
                emit(-inv_qq, {A.has_kt() ? Letter::Kt1i : Letter::K1i});
            }
        } else {
            throw std::logic_error("raw_reduce: unexpected inversion");
        }
    }
    return out;
}

// ---- re-expression of raw one-sided words in PBW coordinates ----

using RawPoly = std::map<std::vector<Letter>, Scalar>;  // raw free combination

void raw_append(RawPoly& p, const std::vector<Letter>& w, const Scalar& c) {
    auto it = p.find(w);
    if (it == p.end()) {
        if (!c.is_zero()) p.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
}

RawPoly raw_product(const RawPoly& a, const RawPoly& b) {
    RawPoly r;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            std::vector<Letter> w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            raw_append(r, w, ca * cb);
        }
    return r;
}

RawPoly raw_letter(Letter g, const FieldMode& m) {
    RawPoly p;
    p.emplace(std::vector<Letter>{g}, Scalar::one(m));
    return p;
}

// free expansion of the composite root vectors
RawPoly raw_composite(bool e_side, const FieldMode& m) {
    RawPoly p;
    if (e_side) {
        p.emplace(std::vector<Letter>{Letter::E1, Letter::E2}, Scalar::one(m));
        p.emplace(std::vector<Letter>{Letter::E2, Letter::E1}, -Scalar::q_power(-1, m));
    } else {
        p.emplace(std::vector<Letter>{Letter::F2, Letter::F1}, Scalar::one(m));
        p.emplace(std::vector<Letter>{Letter::F1, Letter::F2}, -Scalar::q_power(1, m));
    }
    return p;
}

RawPoly raw_power(const RawPoly& a, int n, const FieldMode& m) {
    RawPoly r;
    r.emplace(std::vector<Letter>{}, Scalar::one(m));
    for (int i = 0; i < n; ++i) r = raw_product(r, a);
    return r;
}

struct SideKey {
    bool e_side;
    int d1, d2;
    auto operator<=>(const SideKey&) const = default;
};

// Conversion table for one bidegree: raw word -> PBW exponent coordinates.
struct SideTable {
    std::vector<std::vector<Letter>> words;           // raw words of the bidegree
    std::map<std::vector<Letter>, size_t> word_index;
    std::vector<std::array<int, 3>> pbw;              // admissible PBW exponents
    std::vector<std::vector<std::pair<size_t, Scalar>>> coords;  // per raw word
};

void enumerate_words(int d1, int d2, Letter a, Letter b, std::vector<Letter>& cur,
                     std::vector<std::vector<Letter>>& out) {
    if (d1 == 0 && d2 == 0) {
        out.push_back(cur);
        return;
    }
    if (d1 > 0) {
        cur.push_back(a);
        enumerate_words(d1 - 1, d2, a, b, cur, out);
        cur.pop_back();
    }
    if (d2 > 0) {
        cur.push_back(b);
        enumerate_words(d1, d2 - 1, a, b, cur, out);
        cur.pop_back();
    }
}

SideTable build_side_table(const SideKey& key, const AlgebraId& A) {
    const FieldMode& m = A.mode;
    const Letter a = key.e_side ? Letter::E1 : Letter::F1;
    const Letter b = key.e_side ? Letter::E2 : Letter::F2;
    SideTable table;
    std::vector<Letter> cur;
    enumerate_words(key.d1, key.d2, a, b, cur, table.words);
    for (size_t i = 0; i < table.words.size(); ++i) table.word_index[table.words[i]] = i;
    const size_t R = table.words.size();

    // PBW columns of the bidegree
    std::vector<RawPoly> pbw_cols;
    const int lcap = A.is_quotient() ? A.l() : -1;
    for (int s2 = 0; s2 <= std::min(key.d1, key.d2); ++s2) {
        int s1 = key.d1 - s2, s3 = key.d2 - s2;
        if (lcap > 0 && (s1 >= lcap || s2 >= lcap || s3 >= lcap)) continue;
        RawPoly first = raw_power(raw_letter(key.e_side ? Letter::E1 : Letter::F1, m), s1, m);
        RawPoly middle = raw_power(raw_composite(key.e_side, m), s2, m);
        RawPoly last = raw_power(raw_letter(key.e_side ? Letter::E2 : Letter::F2, m), s3, m);
        RawPoly col = raw_product(raw_product(first, middle), last);
        table.pbw.push_back({s1, s2, s3});
        pbw_cols.push_back(std::move(col));
    }

    // relator columns: padded Serre relations, and padded l-th powers in quotients
    std::vector<RawPoly> relators;
    Scalar two = q_int(2, m);
    {
        RawPoly s1;  // a a b - [2] a b a + b a a
        s1.emplace(std::vector<Letter>{a, a, b}, Scalar::one(m));
        s1.emplace(std::vector<Letter>{a, b, a}, -two);
        s1.emplace(std::vector<Letter>{b, a, a}, Scalar::one(m));
        RawPoly s2;
        s2.emplace(std::vector<Letter>{b, b, a}, Scalar::one(m));
        s2.emplace(std::vector<Letter>{b, a, b}, -two);
        s2.emplace(std::vector<Letter>{a, b, b}, Scalar::one(m));
        relators.push_back(std::move(s1));
        relators.push_back(std::move(s2));
    }
    if (A.is_quotient()) {
        const int l = A.l();
        relators.push_back(raw_power(raw_letter(a, m), l, m));
        relators.push_back(raw_power(raw_letter(b, m), l, m));
        relators.push_back(raw_power(raw_composite(key.e_side, m), l, m));
    }
    std::vector<RawPoly> relator_cols;
    for (const auto& rel : relators) {
        // bidegree of the relator
        int rd1 = 0, rd2 = 0;
        if (!rel.empty()) {
            for (Letter g : rel.begin()->first) (g == a ? rd1 : rd2)++;
        }
        int ud1max = key.d1 - rd1, ud2max = key.d2 - rd2;
        if (ud1max < 0 || ud2max < 0) continue;
        for (int u1 = 0; u1 <= ud1max; ++u1)
            for (int u2 = 0; u2 <= ud2max; ++u2) {
                std::vector<std::vector<Letter>> us, vs;
                std::vector<Letter> tmp;
                enumerate_words(u1, u2, a, b, tmp, us);
                enumerate_words(ud1max - u1, ud2max - u2, a, b, tmp, vs);
                for (const auto& u : us)
                    for (const auto& v : vs) {
                        RawPoly col;
                        for (const auto& [w, c] : rel) {
                            std::vector<Letter> full = u;
                            full.insert(full.end(), w.begin(), w.end());
                            full.insert(full.end(), v.begin(), v.end());
                            raw_append(col, full, c);
                        }
                        if (!col.empty()) relator_cols.push_back(std::move(col));
                    }
            }
    }

    // Row-reduce [pbw | relators | I] once; every raw word is then resolved by
    // back-substitution against its transformed unit vector.
    const size_t P = pbw_cols.size(), S = relator_cols.size();
    Matrix M(R, P + S + R, m);
    auto fill = [&](const RawPoly& col, size_t j) {
        for (const auto& [w, c] : col) M.at(table.word_index.at(w), j) = c;
    };
    for (size_t j = 0; j < P; ++j) fill(pbw_cols[j], j);
    for (size_t j = 0; j < S; ++j) fill(relator_cols[j], P + j);
    for (size_t i = 0; i < R; ++i) M.at(i, P + S + i) = Scalar::one(m);

    // plain Gaussian elimination to reduced echelon over the first P+S columns
    size_t row = 0;
    std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
    for (size_t col = 0; col < P + S && row < R; ++col) {
        size_t piv = row;
        while (piv < R && M.at(piv, col).is_zero()) ++piv;
        if (piv == R) continue;
        if (piv != row)
            for (size_t j = 0; j < M.cols(); ++j) std::swap(M.at(piv, j), M.at(row, j));
        Scalar inv = M.at(row, col).inverse();
        for (size_t j = col; j < M.cols(); ++j) M.at(row, j) *= inv;
        for (size_t i = 0; i < R; ++i) {
            if (i == row || M.at(i, col).is_zero()) continue;
            Scalar f = M.at(i, col);
            for (size_t j = col; j < M.cols(); ++j) M.at(i, j) -= f * M.at(row, j);
        }
        pivots.emplace_back(row, col);
        ++row;
    }
    // rows past the pivot count must vanish on the transformed unit vectors
    // whenever the word is expressible; PBW theory guarantees they do.
    table.coords.resize(R);
    for (size_t widx = 0; widx < R; ++widx) {
        // solution with free variables set to zero: x[pivot col of row r] = rhs[r]
        for (size_t r = pivots.size(); r < R; ++r) {
            if (!M.at(r, P + S + widx).is_zero())
                throw std::logic_error("oracle: raw word not in the PBW + relator span");
        }
        std::vector<std::pair<size_t, Scalar>> cs;
        for (auto [r, c] : pivots) {
            if (c < P && !M.at(r, P + S + widx).is_zero())
                cs.emplace_back(c, M.at(r, P + S + widx));
        }
        table.coords[widx] = std::move(cs);
    }
    return table;
}

struct OracleCache {
    std::mutex mu;
    std::map<std::tuple<AlgebraKind, FieldMode::Kind, int, bool, int, int>, SideTable> tables;

    const SideTable& get(const SideKey& key, const AlgebraId& A) {
        std::lock_guard<std::mutex> lock(mu);
        auto k = std::make_tuple(A.kind, A.mode.kind, A.mode.l, key.e_side, key.d1, key.d2);
        auto it = tables.find(k);
        if (it == tables.end()) it = tables.emplace(k, build_side_table(key, A)).first;
        return it->second;
    }
};

OracleCache& oracle_cache() {
    static OracleCache c;
    return c;
}

}  // namespace

Element oracle_normal_form(const FreeWord& w, const AlgebraId& A) {
    for (Letter g : w.letters) {
        if (!letter_legal(g, A))
            throw std::invalid_argument("oracle_normal_form: illegal letter for algebra");
    }
    if (static_cast<int>(w.letters.size()) > kOracleMaxLetters)
        throw std::invalid_argument("oracle_normal_form: word too long");
    const FieldMode& m = A.mode;

    // eliminate composite letters by their definitions
    std::vector<FreeWord> basic{FreeWord(w.coeff, {})};
    for (Letter g : w.letters) {
        if (g == Letter::E12 || g == Letter::F12) {
            bool e_side = (g == Letter::E12);
            std::vector<FreeWord> next;
            for (const auto& bw : basic) {
                for (const auto& [part, c] : raw_composite(e_side, m)) {
                    FreeWord nw = bw;
                    nw.coeff = nw.coeff * c;
                    nw.letters.insert(nw.letters.end(), part.begin(), part.end());
                    next.push_back(std::move(nw));
                }
            }
            basic = std::move(next);
        } else {
            for (auto& bw : basic) bw.letters.push_back(g);
        }
    }

    Element out(A);
    for (RawTerm& t : raw_reduce(std::move(basic), A)) {
        int fd1 = 0, fd2 = 0, ed1 = 0, ed2 = 0;
        for (Letter g : t.fword) (g == Letter::F1 ? fd1 : fd2)++;
        for (Letter g : t.eword) (g == Letter::E1 ? ed1 : ed2)++;
        const SideTable& ftab = oracle_cache().get(SideKey{false, fd1, fd2}, A);
        const SideTable& etab = oracle_cache().get(SideKey{true, ed1, ed2}, A);
        const auto& fc = ftab.coords[ftab.word_index.at(t.fword)];
        const auto& ec = etab.coords[etab.word_index.at(t.eword)];
        for (const auto& [fi, cf] : fc)
            for (const auto& [ei, ce] : ec) {
                PbwMonomial mon;
                mon.f = ftab.pbw[fi];
                mon.e = etab.pbw[ei];
                mon.k = {t.k[0], t.k[1]};
                mon.kt = {t.kt[0], t.kt[1]};
                out.add_term(mon, t.coeff * cf * ce);
            }
    }
    return out;
}

}  // namespace hopfforge
