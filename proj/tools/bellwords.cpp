// bellwords — exact enumeration of restricted words over finite alphabets.
//
// Subcommands:
//   seq            print terms of a family (or of the m-th invert transform
//                  of an explicit f0 prefix)
//   verify         run verification suites: closed forms vs Bell route vs
//                  generating-function route vs brute force vs block
//                  enumeration, Bell identity checks, transform properties
//   bell           evaluate a partial Bell polynomial
//   enumerate      list the block words for small n
//   bfile-compare  compare family terms against a local b-file
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage/parse error,
// 3 resource budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bellwords/bellpoly.hpp"
#include "bellwords/bfile.hpp"
#include "bellwords/families.hpp"
#include "bellwords/seqtransform.hpp"
#include "bellwords/wordmodel.hpp"

using nlohmann::json;
using namespace bellwords;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

struct int_range {
    int lo = 0;
    int hi = 0;
};

int_range parse_range(const std::string& s) {
    auto pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        int lo = std::stoi(s.substr(0, pos));
        int hi = std::stoi(s.substr(pos + 2));
        if (hi < lo) throw std::invalid_argument("empty range");
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range '" + s + "', expected A..B or a single integer");
    }
}

std::vector<bigint> parse_int_list(const std::string& s) {
    std::vector<bigint> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                     : comma - start);
        if (tok.empty()) throw std::invalid_argument("bad integer list '" + s + "'");
        try {
            out.emplace_back(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

bigint env_budget() {
    if (const char* v = std::getenv("BELLWORDS_BUDGET")) {
        try {
            bigint b(v);
            if (b > 0) return b;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument("BELLWORDS_BUDGET must be a positive integer");
    }
    return default_brute_budget;
}

struct family_opts {
    std::string name;
    std::optional<int> ell, r, q;

    family build() const {
        std::map<std::string, int> params;
        if (ell) params["ell"] = *ell;
        if (r) params["r"] = *r;
        if (q) params["q"] = *q;
        return make_family(name, params);
    }
};

void add_family_flags(CLI::App* cmd, family_opts& fo, bool required) {
    auto* opt = cmd->add_option("--family", fo.name, "family name");
    if (required) opt->required();
    cmd->add_option("--ell", [&fo](const std::vector<std::string>& v) {
        fo.ell = std::stoi(v[0]);
        return true;
    }, "run-length / gap parameter");
    cmd->add_option("--r", [&fo](const std::vector<std::string>& v) {
        fo.r = std::stoi(v[0]);
        return true;
    }, "figurate parameter");
    cmd->add_option("--q", [&fo](const std::vector<std::string>& v) {
        fo.q = std::stoi(v[0]);
        return true;
    }, "restricted-letter count");
}

void print_terms(const std::vector<std::pair<int, bigint>>& terms, const std::string& format) {
    if (format == "plain") {
        for (const auto& [n, v] : terms) std::cout << v << "\n";
    } else if (format == "csv") {
        for (const auto& [n, v] : terms) std::cout << n << "," << v << "\n";
    } else {  // json
        json arr = json::array();
        for (const auto& [n, v] : terms) arr.push_back({{"n", n}, {"value", v.str()}});
        std::cout << arr.dump() << "\n";
    }
}

// ---- seq ----

int cmd_seq(const family_opts& fo, const std::string& f0_list, const std::string& n_range,
            int m, const std::string& format) {
    int_range nr = parse_range(n_range);
    std::vector<std::pair<int, bigint>> terms;
    if (!f0_list.empty()) {
        seq x(parse_int_list(f0_list));
        if (nr.lo < 1 || nr.hi > x.size())
            throw std::invalid_argument("--n range must stay within 1.." + std::to_string(x.size()) +
                                        " for this f0 prefix (no zero-extension)");
        seq y = invert_m(x, m);
        for (int n = nr.lo; n <= nr.hi; ++n) terms.emplace_back(n, y.at(n));
    } else {
        family f = fo.build();
        if (nr.lo < f.min_term_index)
            throw std::invalid_argument("family " + f.name + " terms start at n=" +
                                        std::to_string(f.min_term_index));
        for (int n = nr.lo; n <= nr.hi; ++n) terms.emplace_back(n, f.term(m, n));
    }
    print_terms(terms, format);
    return exit_ok;
}

// ---- bell ----

int cmd_bell(int n, int k, const std::string& z_list, std::optional<int> identity,
             std::optional<int> ell, std::optional<int> r, const std::string& method) {
    if (identity) {
        switch (*identity) {
            case 1:
                if (!ell) throw std::invalid_argument("--identity 1 requires --ell");
                std::cout << identity1_truncated_factorials(n, k, *ell) << "\n";
                return exit_ok;
            case 2:
                if (!ell) throw std::invalid_argument("--identity 2 requires --ell");
                std::cout << identity2_sparse(n, k, *ell) << "\n";
                return exit_ok;
            case 3:
                if (!ell) throw std::invalid_argument("--identity 3 requires --ell");
                std::cout << identity3_gap(n, k, *ell) << "\n";
                return exit_ok;
            case 4:
                if (!r) throw std::invalid_argument("--identity 4 requires --r");
                std::cout << identity4_figurate(n, k, *r) << "\n";
                return exit_ok;
            default:
                throw std::invalid_argument("--identity must be 1..4");
        }
    }
    if (z_list.empty()) throw std::invalid_argument("bell: need --z or --identity");
    bell_args z(parse_int_list(z_list));
    if (z.size() < n - k + 1)
        throw std::invalid_argument("bell: z has " + std::to_string(z.size()) +
                                    " terms, need n-k+1 = " + std::to_string(n - k + 1));
    bigint v = (method == "oracle") ? bell_oracle(n, k, z) : bell_recurrence(n, k, z);
    std::cout << v << "\n";
    return exit_ok;
}

// ---- enumerate ----

int cmd_enumerate(const family_opts& fo, int b, const std::string& f0_list, int m, int n,
                  bool by_k, const bigint& budget) {
    block_system sys;
    if (!fo.name.empty()) {
        sys = fo.build().block_sys;
    } else {
        if (f0_list.empty()) throw std::invalid_argument("enumerate: need --family or --b/--f0");
        std::vector<bigint> f0 = parse_int_list(f0_list);
        sys.b = b;
        sys.f0 = [f0](int j) {
            return (j >= 1 && j <= static_cast<int>(f0.size())) ? f0[static_cast<size_t>(j - 1)]
                                                                : bigint(0);
        };
    }
    if (by_k) {
        auto grouped = enumerate_blockwords_by_k(sys, m, n, budget);
        for (const auto& [k, words] : grouped)
            for (const auto& w : words) std::cout << k << " " << word_to_string(w) << "\n";
    } else {
        auto words = enumerate_blockwords(sys, m, n, budget);
        for (const auto& w : words) std::cout << word_to_string(w) << "\n";
    }
    return exit_ok;
}

// ---- verify ----

struct check_result {
    std::string name;
    bool ok = true;
    std::string detail;
};

void run_identity_suite(int n_max, std::vector<check_result>& out) {
    struct suite_entry {
        int id;
        int p_lo, p_hi;  // ell or r range
    };
    for (const suite_entry& s :
         {suite_entry{1, 1, 4}, suite_entry{2, 2, 4}, suite_entry{3, 1, 4}, suite_entry{4, 0, 3}}) {
        check_result c;
        c.name = "identity " + std::to_string(s.id) + " vs oracle, n<=" + std::to_string(n_max);
        for (int p = s.p_lo; p <= s.p_hi && c.ok; ++p) {
            for (int n = 1; n <= n_max && c.ok; ++n) {
                for (int k = 1; k <= n; ++k) {
                    int len = n - k + 1;
                    bigint closed, reference;
                    switch (s.id) {
                        case 1:
                            closed = identity1_truncated_factorials(n, k, p);
                            reference = bell_oracle(n, k, identity1_args(len, p));
                            break;
                        case 2:
                            closed = identity2_sparse(n, k, p);
                            reference = bell_oracle(n, k, identity2_args(len, p));
                            break;
                        case 3:
                            closed = identity3_gap(n, k, p);
                            reference = bell_oracle(n, k, identity3_args(len, p));
                            break;
                        default:
                            closed = identity4_figurate(n, k, p);
                            reference = bell_oracle(n, k, identity4_args(len, p));
                            break;
                    }
                    if (closed != reference) {
                        c.ok = false;
                        c.detail = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                   " param=" + std::to_string(p) + ": closed " + closed.str() +
                                   " != oracle " + reference.str();
                        break;
                    }
                }
            }
        }
        out.push_back(std::move(c));
    }
}

void run_transform_suite(int len, int m_max, std::vector<check_result>& out) {
    std::mt19937 rng(20250811);
    std::uniform_int_distribution<int> coef(-9, 9);
    auto random_seq = [&]() {
        std::vector<bigint> t(static_cast<size_t>(len));
        for (auto& v : t) v = coef(rng);
        return seq(std::move(t));
    };

    check_result route{"invert_m == bell route == m-fold composition, len=" + std::to_string(len),
                       true, ""};
    check_result round{"invert_inverse round trips", true, ""};
    check_result scaling{"m-fold transform equals (1/m) invert(m*x)", true, ""};
    for (int trial = 0; trial < 25 && route.ok && round.ok && scaling.ok; ++trial) {
        seq x = random_seq();
        for (int m = 1; m <= m_max; ++m) {
            seq direct = invert_m(x, m);
            seq via_bell = invert_m_via_bell(x, m);
            seq composed = x;
            for (int i = 0; i < m; ++i) composed = invert(composed);
            if (!(direct == via_bell && direct == composed)) {
                route.ok = false;
                route.detail = "trial " + std::to_string(trial) + " m=" + std::to_string(m);
                break;
            }
            std::vector<bigint> scaled(static_cast<size_t>(len));
            for (int n = 1; n <= len; ++n) scaled[static_cast<size_t>(n - 1)] = m * x.at(n);
            seq ym = invert(seq(scaled));
            bool good = true;
            for (int n = 1; n <= len; ++n) {
                if (ym.at(n) % m != 0 || ym.at(n) / m != direct.at(n)) {
                    good = false;
                    break;
                }
            }
            if (!good) {
                scaling.ok = false;
                scaling.detail = "trial " + std::to_string(trial) + " m=" + std::to_string(m);
            }
        }
        seq y = invert(x);
        if (!(invert_inverse(y) == x && invert(invert_inverse(x)) == x)) {
            round.ok = false;
            round.detail = "trial " + std::to_string(trial);
        }
    }
    out.push_back(std::move(route));
    out.push_back(std::move(round));
    out.push_back(std::move(scaling));
}

void run_chebyshev_suite(int n_max, std::vector<check_result>& out) {
    std::vector<long long> xs;
    for (long long x = -3; x <= 10; ++x) xs.push_back(x);
    check_result c;
    c.name = "chebyshev recurrence in exact arithmetic, n<" + std::to_string(n_max);
    c.ok = chebyshev_identity_check(n_max, xs);
    out.push_back(std::move(c));
}

void run_family_suite(int n_max, int m_max, const bigint& budget,
                      std::vector<check_result>& out) {
    verify_options opt;
    opt.brute_budget = budget;
    opt.on_over_budget = budget_policy::skip;
    for (const family& f : standard_catalog()) {
        verify_report rep = cross_verify(f, 1, m_max, 0, n_max, opt);
        check_result c;
        c.name = rep.family_name + ", m<=" + std::to_string(m_max) + ", n<=" + std::to_string(n_max);
        c.ok = rep.all_ok();
        if (!c.ok) {
            const verify_cell* bad = rep.first_mismatch();
            c.detail =
                "m=" + std::to_string(bad->m) + " n=" + std::to_string(bad->n) + ": " + bad->note;
        }
        out.push_back(std::move(c));
    }
}

int cmd_verify(const std::string& suite, const family_opts& fo, int m, int m_max_opt,
               const std::string& n_range, int n_max, int len, bool skip_over_budget,
               const bigint& budget, bool as_json) {
    std::vector<check_result> results;
    if (!fo.name.empty()) {
        family f = fo.build();
        int_range nr = parse_range(n_range);
        verify_options opt;
        opt.brute_budget = budget;
        opt.on_over_budget = skip_over_budget ? budget_policy::skip : budget_policy::error;
        int m_hi = m_max_opt > 0 ? m_max_opt : m;
        verify_report rep = cross_verify(f, m, m_hi, nr.lo, nr.hi, opt);
        check_result c;
        c.name = rep.family_name;
        c.ok = rep.all_ok();
        if (!c.ok) {
            const verify_cell* bad = rep.first_mismatch();
            c.detail =
                "m=" + std::to_string(bad->m) + " n=" + std::to_string(bad->n) + ": " + bad->note;
        }
        results.push_back(std::move(c));
    } else if (suite == "identities") {
        run_identity_suite(n_max, results);
    } else if (suite == "transforms") {
        run_transform_suite(len, m_max_opt > 0 ? m_max_opt : 4, results);
    } else if (suite == "chebyshev") {
        run_chebyshev_suite(n_max > 12 ? n_max : 30, results);
    } else if (suite == "families") {
        run_family_suite(n_max, m_max_opt > 0 ? m_max_opt : 3, budget, results);
    } else if (suite == "all") {
        run_identity_suite(n_max, results);
        run_transform_suite(len, 4, results);
        run_chebyshev_suite(30, results);
        run_family_suite(n_max, m_max_opt > 0 ? m_max_opt : 3, budget, results);
    } else {
        throw std::invalid_argument("unknown suite '" + suite +
                                    "' (identities|transforms|chebyshev|families|all)");
    }

    bool all_ok = true;
    for (const auto& c : results) all_ok = all_ok && c.ok;
    if (as_json) {
        json arr = json::array();
        for (const auto& c : results)
            arr.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        std::cout << json{{"ok", all_ok}, {"checks", arr}}.dump() << "\n";
    } else {
        for (const auto& c : results) {
            std::cout << (c.ok ? "PASS" : "FAIL") << "  " << c.name;
            if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
            std::cout << "\n";
        }
    }
    return all_ok ? exit_ok : exit_mismatch;
}

// ---- bfile-compare ----

int cmd_bfile_compare(const family_opts& fo, int m, const std::string& n_range, int offset,
                      const std::string& path) {
    family f = fo.build();
    int_range nr = parse_range(n_range);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open b-file '" + path + "'");
    std::vector<bfile_entry> entries = parse_bfile(in);
    std::map<long long, const bigint*> by_index;
    for (const auto& e : entries) by_index[e.index] = &e.value;

    int compared = 0;
    for (int n = std::max(nr.lo, f.min_term_index); n <= nr.hi; ++n) {
        auto it = by_index.find(static_cast<long long>(n) + offset);
        if (it == by_index.end()) continue;
        ++compared;
        bigint ours = f.term(m, n);
        if (ours != *it->second) {
            std::cout << "mismatch at n=" << n << " (b-file index " << n + offset << "): family "
                      << ours << " != b-file " << *it->second << "\n";
            return exit_mismatch;
        }
    }
    if (compared == 0) throw std::invalid_argument("no overlapping indices");
    std::cout << compared << " terms match\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration of restricted words over finite alphabets"};
    app.require_subcommand(1);

    // seq
    auto* seq_cmd = app.add_subcommand("seq", "print family terms or an invert-transform prefix");
    family_opts seq_fam;
    std::string seq_f0, seq_n, seq_format = "plain";
    int seq_m = 1;
    add_family_flags(seq_cmd, seq_fam, false);
    seq_cmd->add_option("--f0", seq_f0, "explicit f0 prefix, comma separated");
    seq_cmd->add_option("--m", seq_m, "alphabet extension parameter")->check(CLI::NonNegativeNumber);
    seq_cmd->add_option("--n", seq_n, "index range A..B")->required();
    seq_cmd->add_option("--format", seq_format, "plain|csv|json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));

    // bell
    auto* bell_cmd = app.add_subcommand("bell", "evaluate a partial Bell polynomial");
    int bell_n = 0, bell_k = 0;
    std::string bell_z, bell_method = "recurrence";
    std::optional<int> bell_identity, bell_ell, bell_r;
    bell_cmd->add_option("--n", bell_n)->required();
    bell_cmd->add_option("--k", bell_k)->required();
    bell_cmd->add_option("--z", bell_z, "argument vector z_1,z_2,...");
    bell_cmd->add_option("--identity", [&bell_identity](const std::vector<std::string>& v) {
        bell_identity = std::stoi(v[0]);
        return true;
    }, "evaluate a closed-form identity (1..4)");
    bell_cmd->add_option("--ell", [&bell_ell](const std::vector<std::string>& v) {
        bell_ell = std::stoi(v[0]);
        return true;
    });
    bell_cmd->add_option("--r", [&bell_r](const std::vector<std::string>& v) {
        bell_r = std::stoi(v[0]);
        return true;
    });
    bell_cmd->add_option("--method", bell_method, "oracle|recurrence")
        ->check(CLI::IsMember({"oracle", "recurrence"}));

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "list block words for small n");
    family_opts enum_fam;
    std::string enum_f0;
    int enum_b = 1, enum_m = 1, enum_n = 0;
    bool enum_by_k = false;
    long long enum_budget = default_enum_budget;
    add_family_flags(enum_cmd, enum_fam, false);
    enum_cmd->add_option("--b", enum_b, "block head letter");
    enum_cmd->add_option("--f0", enum_f0, "f0 prefix, comma separated (lex selector)");
    enum_cmd->add_option("--m", enum_m)->check(CLI::PositiveNumber);
    enum_cmd->add_option("--n", enum_n, "word length")->required();
    enum_cmd->add_flag("--by-k", enum_by_k, "prefix each word with its block count");
    enum_cmd->add_option("--budget", enum_budget, "maximum number of words")
        ->check(CLI::PositiveNumber);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    family_opts verify_fam;
    std::string verify_suite, verify_n = "0..10";
    int verify_m = 1, verify_m_max = 0, verify_n_max = 12, verify_len = 20;
    bool verify_json = false, verify_skip = false;
    long long verify_budget = 0;
    verify_cmd->add_option("--suite", verify_suite, "identities|transforms|chebyshev|families|all");
    add_family_flags(verify_cmd, verify_fam, false);
    verify_cmd->add_option("--m", verify_m)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--m-max", verify_m_max)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--n", verify_n, "term index range A..B");
    verify_cmd->add_option("--n-max", verify_n_max)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--len", verify_len, "sequence length for the transform suite");
    verify_cmd->add_flag("--json", verify_json, "machine-readable results");
    verify_cmd->add_flag("--skip-over-budget", verify_skip,
                         "skip brute-force cells instead of failing with exit 3");
    verify_cmd->add_option("--budget", verify_budget, "brute-force candidate budget")
        ->check(CLI::PositiveNumber);

    // bfile-compare
    auto* bfile_cmd = app.add_subcommand("bfile-compare", "compare family terms to a b-file");
    family_opts bfile_fam;
    std::string bfile_n, bfile_path;
    int bfile_m = 1, bfile_offset = 0;
    add_family_flags(bfile_cmd, bfile_fam, true);
    bfile_cmd->add_option("--m", bfile_m)->check(CLI::PositiveNumber);
    bfile_cmd->add_option("--n", bfile_n, "term index range A..B")->required();
    bfile_cmd->add_option("--offset", bfile_offset, "b-file index = term index + offset")
        ->required();
    bfile_cmd->add_option("--bfile", bfile_path, "path to b-file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (seq_cmd->parsed()) {
            if (seq_fam.name.empty() == seq_f0.empty())
                throw std::invalid_argument("seq: need exactly one of --family or --f0");
            return cmd_seq(seq_fam, seq_f0, seq_n, seq_m, seq_format);
        }
        if (bell_cmd->parsed())
            return cmd_bell(bell_n, bell_k, bell_z, bell_identity, bell_ell, bell_r, bell_method);
        if (enum_cmd->parsed())
            return cmd_enumerate(enum_fam, enum_b, enum_f0, enum_m, enum_n, enum_by_k,
                                 bigint(enum_budget));
        if (verify_cmd->parsed()) {
            bigint budget = verify_budget > 0 ? bigint(verify_budget) : env_budget();
            if (verify_fam.name.empty() && verify_suite.empty())
                throw std::invalid_argument("verify: need --suite or --family");
            return cmd_verify(verify_suite, verify_fam, verify_m, verify_m_max, verify_n,
                              verify_n_max, verify_len, verify_skip, budget, verify_json);
        }
        if (bfile_cmd->parsed())
            return cmd_bfile_compare(bfile_fam, bfile_m, bfile_n, bfile_offset, bfile_path);
        throw std::invalid_argument("no subcommand");
    } catch (const budget_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return exit_budget;
    } catch (const bfile_error& e) {
        std::cerr << "b-file: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
