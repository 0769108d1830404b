#include "bellwords/families.hpp"

#include <sstream>
#include <stdexcept>
#include "bellwords/seqtransform.hpp"

namespace bellwords {

namespace {

void check_mn(int m, int n) {
    if (m < 1) throw std::invalid_argument("family closed form: m must be >= 1");
    if (n < 0) throw std::invalid_argument("family closed form: n must be >= 0");
}

// ---- zero-run scans ----

// no run of `ell` consecutive zeros; prefix-closed
bool no_zero_run_of(const word& w, int ell) {
    int run = 0;
    for (int c : w) {
        run = (c == 0) ? run + 1 : 0;
        if (run >= ell) return false;
    }
    return true;
}

// every maximal zero run even; when trailing_free, the unfinished final
// run is exempt (prefix viability)
bool zero_runs_even(const word& w, bool trailing_free) {
    int run = 0;
    for (int c : w) {
        if (c == 0) {
            ++run;
        } else {
            if (run % 2 != 0) return false;
            run = 0;
        }
    }
    return trailing_free || run % 2 == 0;
}

bool zero_runs_exactly(const word& w, int ell, bool trailing_free) {
    int run = 0;
    for (int c : w) {
        if (c == 0) {
            ++run;
            if (run > ell) return false;
        } else {
            if (run != 0 && run != ell) return false;
            run = 0;
        }
    }
    if (trailing_free) return run <= ell;
    return run == 0 || run == ell;
}

bool no_zero_run_of_exactly(const word& w, int ell, bool trailing_free) {
    int run = 0;
    for (int c : w) {
        if (c == 0) {
            ++run;
        } else {
            if (run == ell) return false;
            run = 0;
        }
    }
    return trailing_free || run != ell;
}

// at least ell zeros between consecutive nonzero letters; prefix-closed
bool gaps_at_least(const word& w, int ell) {
    int last = -1;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (w[i] == 0) continue;
        if (last >= 0 && i - last - 1 < ell) return false;
        last = i;
    }
    return true;
}

}  // namespace

family fam_bounded_zero_runs(int ell) {
    if (ell < 1) throw std::invalid_argument("bounded-zero-runs: ell must be >= 1");
    family f;
    f.name = "bounded-zero-runs";
    f.params = {{"ell", ell}};
    f.block_sys.b = 1;
    f.block_sys.f0 = [ell](int j) { return bigint(j <= ell ? 1 : 0); };
    f.word_offset = 1;
    f.fm = [ell](int m, int n) -> bigint {
        check_mn(m, n);
        if (n == 0) return 1;
        bigint total = 0;
        for (int k = 1; k <= n; ++k) {
            bigint inner = 0;
            for (int j = 0; j <= (n - k) / ell; ++j) {
                bigint t = binomial(k, j) * binomial(n - 1 - static_cast<long>(ell) * j, k - 1);
                inner += (j % 2 == 0) ? t : -t;
            }
            total += inner * int_pow(m, k - 1);
        }
        return total;
    };
    f.make_predicate = [ell](int) {
        word_predicate p;
        p.accept = [ell](const word& w) { return no_zero_run_of(w, ell); };
        p.viable = p.accept;
        return p;
    };
    return f;
}

family fam_odd_zero_runs() {
    family f;
    f.name = "odd-zero-runs";
    f.block_sys.b = 1;
    f.block_sys.f0 = [](int j) { return bigint(j % 2 == 1 ? 1 : 0); };
    f.word_offset = 1;
    f.fm = [](int m, int n) -> bigint {
        check_mn(m, n);
        if (n == 0) return 1;
        bigint total = 0;
        for (int k = 0; k <= (n - 1) / 2; ++k)
            total += binomial(n - 1 - k, k) * int_pow(m, n - 1 - 2 * k);
        return total;
    };
    f.make_predicate = [](int) {
        word_predicate p;
        p.accept = [](const word& w) { return zero_runs_even(w, false); };
        p.viable = [](const word& w) { return zero_runs_even(w, true); };
        return p;
    };
    return f;
}

family fam_min_gap(int ell) {
    if (ell < 1) throw std::invalid_argument("min-gap: ell must be >= 1");
    family f;
    f.name = "min-gap";
    f.params = {{"ell", ell}};
    f.block_sys.b = 1;
    f.block_sys.f0 = [ell](int j) { return bigint(j <= ell ? 0 : 1); };
    f.word_offset = 2 * ell + 1;
    f.fm = [ell](int m, int n) -> bigint {
        check_mn(m, n);
        if (n == 0) return 1;
        bigint total = 0;
        for (int k = 1; k <= n; ++k) {
            bigint b = binomial(n - static_cast<long>(ell) * k - 1, k - 1);
            if (b == 0) continue;
            total += b * int_pow(m, k - 1);
        }
        return total;
    };
    f.make_predicate = [ell](int) {
        word_predicate p;
        p.accept = [ell](const word& w) { return gaps_at_least(w, ell); };
        p.viable = p.accept;
        return p;
    };
    return f;
}

word_predicate min_gap_block_predicate(int ell, int n) {
    word_predicate p;
    auto ok_through = [ell, n](const word& w, bool full) {
        if (!w.empty() && w[0] != 1) return false;
        if (full && w.empty()) return false;
        int len = static_cast<int>(w.size());
        for (int i = 0; i < len; ++i) {
            if (w[i] == 0) continue;
            if (i + ell > n - 1) return false;  // not enough room for the zeros
            int upto = full ? i + ell : std::min(i + ell, len - 1);
            for (int t = i + 1; t <= upto; ++t)
                if (w[t] != 0) return false;
        }
        return true;
    };
    p.accept = [ok_through](const word& w) { return ok_through(w, true); };
    p.viable = [ok_through](const word& w) { return ok_through(w, false); };
    return p;
}

family fam_zero_blocks_exactly(int ell) {
    // ell = 1 would collapse f0(1) = f0(2) = 1 into a different family; the
    // formula below is stated for ell >= 2 and we reject the rest.
    if (ell < 2) throw std::invalid_argument("zero-blocks-exactly: ell must be >= 2");
    family f;
    f.name = "zero-blocks-exactly";
    f.params = {{"ell", ell}};
    f.block_sys.b = 1;
    f.block_sys.f0 = [ell](int j) { return bigint(j == 1 || j == ell + 1 ? 1 : 0); };
    f.word_offset = 1;
    f.fm = [ell](int m, int n) -> bigint {
        check_mn(m, n);
        if (n == 0) return 1;
        bigint total = 0;
        for (int i = 0; i <= n / ell; ++i) {
            bigint b = binomial(n - static_cast<long>(ell) * i, i);
            if (b == 0) continue;
            total += b * int_pow(m, n - 1 - static_cast<long>(ell) * i);
        }
        return total;
    };
    f.make_predicate = [ell](int) {
        word_predicate p;
        p.accept = [ell](const word& w) { return zero_runs_exactly(w, ell, false); };
        p.viable = [ell](const word& w) { return zero_runs_exactly(w, ell, true); };
        return p;
    };
    return f;
}

family fam_no_exact_run(int ell) {
    if (ell < 1) throw std::invalid_argument("no-exact-run: ell must be >= 1");
    family f;
    f.name = "no-exact-run";
    f.params = {{"ell", ell}};
    f.block_sys.b = 1;
    f.block_sys.f0 = [ell](int j) { return bigint(j == ell + 1 ? 0 : 1); };
    f.word_offset = 1;
    // single delta-form expression; the two printed case splits on
    // (ell+1) | n are consequences, exercised by the tests
    f.fm = [ell](int m, int n) -> bigint {
        check_mn(m, n);
        if (n == 0) return 1;
        bigint total = 0;
        for (int k = 1; k <= n; ++k) {
            bigint inner = 0;
            for (int kappa = 0; kappa < k; ++kappa) {
                bigint t = binomial(k, kappa) *
                           binomial(n - 1 - static_cast<long>(ell + 1) * kappa, k - kappa - 1);
                inner += (kappa % 2 == 0) ? t : -t;
            }
            if (static_cast<long>(ell + 1) * k == n) inner += (k % 2 == 0) ? 1 : -1;
            total += inner * int_pow(m, k - 1);
        }
        return total;
    };
    f.make_predicate = [ell](int) {
        word_predicate p;
        p.accept = [ell](const word& w) { return no_zero_run_of_exactly(w, ell, false); };
        p.viable = [ell](const word& w) { return no_zero_run_of_exactly(w, ell, true); };
        return p;
    };
    return f;
}

family fam_ascent_avoiding(int r) {
    if (r < 0) throw std::invalid_argument("ascent-avoiding: r must be >= 0");
    family f;
    f.name = "ascent-avoiding";
    f.params = {{"r", r}};
    // head letter r+2: the nonincreasing blocks of W_{r+2}(j) number
    // C(j-1 + (r+2) - 1, (r+2)-1) = C(j+r, r+1), which is f0
    f.block_sys.b = r + 2;
    f.block_sys.selector = selector_kind::nonincreasing;
    f.block_sys.f0 = [r](int j) { return binomial(j + r, r + 1); };
    f.word_offset = 1;
    f.term_is_fm_indexed = true;
    f.min_term_index = 1;
    f.fm = [r](int m, int n) -> bigint {
        check_mn(m, n);
        if (n == 0) return 1;
        bigint total = 0;
        for (int k = 1; k <= n; ++k) {
            bigint b = binomial(n + static_cast<long>(r + 1) * k - 1, n - k);
            if (b == 0) continue;
            total += b * int_pow(m, k - 1);
        }
        return total;
    };
    f.make_predicate = [r](int) {
        word_predicate p;
        p.accept = [r](const word& w) {
            for (size_t i = 1; i < w.size(); ++i)
                if (w[i - 1] < w[i] && w[i] <= r + 1) return false;
            return true;
        };
        p.viable = p.accept;
        return p;
    };
    return f;
}

family fam_ii_avoiding(int q) {
    if (q < 1) throw std::invalid_argument("ii-avoiding: q must be >= 1");
    family f;
    f.name = "ii-avoiding";
    f.params = {{"q", q}};
    f.block_sys.b = q;
    f.block_sys.selector = selector_kind::by_predicate;
    f.block_sys.block_pred = [q](const word& w) {
        for (size_t i = 1; i < w.size(); ++i)
            if (w[i - 1] == w[i] && w[i] < q) return false;
        return true;
    };
    // 0^0 = 1 makes this right at q = 1, j = 2
    f.block_sys.f0 = [q](int j) {
        if (j == 1) return bigint(1);
        return q * int_pow(q - 1, j - 2);
    };
    f.word_offset = 1;
    f.fm = [q](int m, int big_n) -> bigint {
        check_mn(m, big_n);
        if (big_n == 0) return 1;
        const int n = big_n - 1;  // count of words of length n
        bigint total = int_pow(m, n);
        for (int k = 1; k <= n; ++k) {
            bigint inner = 0;
            for (int l = 0; l <= k - 1; ++l) {
                bigint b = binomial(k, l) * binomial(n - k, k - l - 1);
                if (b == 0) continue;
                // nonzero binomials force n+1+l-2k >= 0
                inner += b * int_pow(q, k - l) * int_pow(q - 1, n + 1 + l - 2 * k);
            }
            total += inner * int_pow(m, k - 1);
        }
        return total;
    };
    f.make_predicate = [q](int) {
        word_predicate p;
        p.accept = [q](const word& w) {
            for (size_t i = 1; i < w.size(); ++i)
                if (w[i - 1] == w[i] && w[i] < q) return false;
            return true;
        };
        p.viable = p.accept;
        return p;
    };
    return f;
}

std::vector<family> standard_catalog() {
    std::vector<family> fams;
    for (int ell : {1, 2, 3}) fams.push_back(fam_bounded_zero_runs(ell));
    fams.push_back(fam_odd_zero_runs());
    for (int ell : {1, 2}) fams.push_back(fam_min_gap(ell));
    for (int ell : {2, 3}) fams.push_back(fam_zero_blocks_exactly(ell));
    for (int ell : {1, 2}) fams.push_back(fam_no_exact_run(ell));
    for (int r : {0, 1}) fams.push_back(fam_ascent_avoiding(r));
    for (int q : {1, 2, 3}) fams.push_back(fam_ii_avoiding(q));
    return fams;
}

namespace {
int param_or_throw(const std::map<std::string, int>& params, const std::string& key,
                   const std::string& fam) {
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("family " + fam + " requires parameter --" + key);
    return it->second;
}
}  // namespace

family make_family(const std::string& name, const std::map<std::string, int>& params) {
    if (name == "bounded-zero-runs") return fam_bounded_zero_runs(param_or_throw(params, "ell", name));
    if (name == "odd-zero-runs") return fam_odd_zero_runs();
    if (name == "min-gap") return fam_min_gap(param_or_throw(params, "ell", name));
    if (name == "zero-blocks-exactly")
        return fam_zero_blocks_exactly(param_or_throw(params, "ell", name));
    if (name == "no-exact-run") return fam_no_exact_run(param_or_throw(params, "ell", name));
    if (name == "ascent-avoiding") return fam_ascent_avoiding(param_or_throw(params, "r", name));
    if (name == "ii-avoiding") return fam_ii_avoiding(param_or_throw(params, "q", name));
    throw std::invalid_argument("unknown family: " + name);
}

bigint chebyshev_g(int n, const bigint& x) {
    if (n < 0) throw std::invalid_argument("chebyshev_g: n must be >= 0");
    bigint total = 0;
    bigint xp = 1;
    for (int k = 0; k <= n; ++k) {
        total += binomial(n + k + 1, n - k) * xp;
        xp *= x;
    }
    return total;
}

bool chebyshev_identity_check(int n_max, const std::vector<long long>& x_values) {
    if (n_max < 2) throw std::invalid_argument("chebyshev_identity_check: n_max must be >= 2");
    for (long long xv : x_values) {
        bigint x(xv);
        std::vector<bigint> g(static_cast<size_t>(n_max) + 1);
        for (int n = 0; n <= n_max; ++n) g[static_cast<size_t>(n)] = chebyshev_g(n, x);
        if (g[0] != 1) return false;
        if (g[1] != x + 2) return false;
        for (int n = 1; n < n_max; ++n)
            if (g[static_cast<size_t>(n + 1)] !=
                (x + 2) * g[static_cast<size_t>(n)] - g[static_cast<size_t>(n - 1)])
                return false;
    }
    return true;
}

// ---- cross-verification ----

bool verify_report::all_ok() const {
    for (const auto& c : cells)
        if (!c.ok) return false;
    return true;
}

const verify_cell* verify_report::first_mismatch() const {
    for (const auto& c : cells)
        if (!c.ok) return &c;
    return nullptr;
}

std::string verify_report::summary() const {
    std::ostringstream os;
    os << family_name << ": " << cells.size() << " cells, ";
    if (all_ok()) {
        os << "all routes agree";
    } else {
        const verify_cell* c = first_mismatch();
        os << "FIRST MISMATCH at m=" << c->m << " n=" << c->n << " (" << c->note << ")";
    }
    return os.str();
}

namespace {

std::string display_name(const family& f) {
    std::string s = f.name;
    if (!f.params.empty()) {
        s += "(";
        bool first = true;
        for (const auto& [k, v] : f.params) {
            if (!first) s += ",";
            s += k + "=" + std::to_string(v);
            first = false;
        }
        s += ")";
    }
    return s;
}

}  // namespace

verify_report cross_verify(const family& f, int m_lo, int m_hi, int n_lo, int n_hi,
                           const verify_options& opt) {
    if (m_lo < 1 || m_hi < m_lo) throw std::invalid_argument("cross_verify: bad m range");
    if (n_hi < n_lo) throw std::invalid_argument("cross_verify: bad n range");
    verify_report report;
    report.family_name = display_name(f);

    n_lo = std::max(n_lo, f.min_term_index);
    for (int m = m_lo; m <= m_hi; ++m) {
        const int len_hi = f.term_is_fm_indexed ? n_hi - 1 : n_hi;
        if (len_hi < 0) continue;
        const int fm_hi = len_hi + f.word_offset;
        seq f0_prefix = seq::from_f0(f.block_sys.f0, fm_hi);
        seq gf = invert_m(f0_prefix, m);
        seq bell = invert_m_via_bell(f0_prefix, m);
        word_predicate pred = f.make_predicate(m);

        for (int n = n_lo; n <= n_hi; ++n) {
            verify_cell cell;
            cell.m = m;
            cell.n = n;
            cell.length = f.term_is_fm_indexed ? n - 1 : n;
            const int fm_index = cell.length + f.word_offset;

            cell.closed = f.fm(m, fm_index);
            cell.bell = bell.at(fm_index);
            cell.gf = gf.at(fm_index);

            bigint space = int_pow(f.alphabet(m), cell.length);
            if (space <= opt.brute_budget) {
                cell.brute = brute_count(f.alphabet(m), cell.length, pred, opt.brute_budget);
            } else if (opt.on_over_budget == budget_policy::error) {
                throw budget_error("cross_verify " + report.family_name + " at m=" +
                                   std::to_string(m) + " n=" + std::to_string(n) + ": " +
                                   space.str() + " brute-force candidates exceed budget " +
                                   opt.brute_budget.str());
            } else {
                cell.note += "brute skipped (over budget); ";
            }

            bigint expected = count_blockwords(f.block_sys, m, fm_index);
            if (expected <= opt.enum_budget) {
                if (opt.check_block_refinement) {
                    auto by_k = enumerate_blockwords_by_k(f.block_sys, m, fm_index, opt.enum_budget);
                    bigint total = 0;
                    for (const auto& [k, words] : by_k) total += words.size();
                    cell.enum_count = total;
                    auto terms = bell_route_terms(f0_prefix, m, fm_index);
                    for (int k = 1; k <= fm_index; ++k) {
                        bigint got = 0;
                        if (auto it = by_k.find(k); it != by_k.end()) got = it->second.size();
                        if (got != terms[static_cast<size_t>(k - 1)]) {
                            cell.refinement_ok = false;
                            cell.note += "k=" + std::to_string(k) + " block count " + got.str() +
                                         " != bell term " + terms[static_cast<size_t>(k - 1)].str() +
                                         "; ";
                            break;
                        }
                    }
                } else {
                    cell.enum_count =
                        enumerate_blockwords(f.block_sys, m, fm_index, opt.enum_budget).size();
                }
            } else {
                cell.note += "enumeration skipped (over budget); ";
            }

            cell.ok = cell.refinement_ok && cell.bell == cell.closed && cell.gf == cell.closed &&
                      (!cell.brute || *cell.brute == cell.closed) &&
                      (!cell.enum_count || *cell.enum_count == cell.closed);
            if (!cell.ok) {
                std::ostringstream os;
                os << "closed=" << cell.closed << " bell=" << cell.bell << " gf=" << cell.gf;
                if (cell.brute) os << " brute=" << *cell.brute;
                if (cell.enum_count) os << " enum=" << *cell.enum_count;
                cell.note += os.str();
            }
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

}  // namespace bellwords
