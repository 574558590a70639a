// Command-line surface for the Dyck-sequence laboratory: statistics,
// q,t-Catalan formulas, string tables, tableau insertion, truncated
// symmetric functions, finite checkers, and the flat-middle scan.

#include "dycklab/bijections.hpp"
#include "dycklab/catalan.hpp"
#include "dycklab/seq.hpp"
#include "dycklab/skeleton.hpp"
#include "dycklab/symfun.hpp"
#include "dycklab/text.hpp"
#include "dycklab/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>

using namespace dycklab;
using nlohmann::json;

namespace {

enum class Format { Text, Tsv, Json };

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "tsv") return Format::Tsv;
    if (name == "json") return Format::Json;
    throw CLI::ValidationError("--format", "expected text, tsv, or json");
}

json qtpoly_json(const QtPoly& poly) {
    json terms = json::array();
    // Display order: total degree descending, then q-exponent descending.
    std::vector<std::pair<QtPoly::Key, BigInt>> items(poly.terms().begin(), poly.terms().end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        const long long da = static_cast<long long>(a.first.first) + a.first.second;
        const long long db = static_cast<long long>(b.first.first) + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    for (const auto& [key, coeff] : items)
        terms.push_back({key.first, key.second, coeff.str()});
    return json{{"terms", terms}};
}

void print_qtpoly(const QtPoly& poly, Format format, const std::string& name) {
    if (format == Format::Text) {
        std::cout << poly.str() << "\n";
    } else if (format == Format::Tsv) {
        std::vector<std::pair<QtPoly::Key, BigInt>> items(poly.terms().begin(),
                                                          poly.terms().end());
        std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
            const long long da = static_cast<long long>(a.first.first) + a.first.second;
            const long long db = static_cast<long long>(b.first.first) + b.first.second;
            if (da != db) return da > db;
            return a.first.first > b.first.first;
        });
        std::cout << "q_exp\tt_exp\tcoeff\n";
        for (const auto& [key, coeff] : items)
            std::cout << key.first << '\t' << key.second << '\t' << coeff.str() << '\n';
    } else {
        json out = qtpoly_json(poly);
        out["name"] = name;
        std::cout << out.dump() << "\n";
    }
}

void print_truncpoly(const TruncPoly& poly, Format format) {
    if (format == Format::Text) {
        std::cout << poly.str() << "\n";
        return;
    }
    if (format == Format::Tsv) {
        std::cout << "exponents\tcoeff\n";
        for (const auto& [key, coeff] : poly.terms())
            std::cout << seq_to_string(key) << '\t' << coeff.str() << '\n';
        return;
    }
    json terms = json::array();
    for (const auto& [key, coeff] : poly.terms()) terms.push_back({json(key), coeff.str()});
    std::cout << json{{"num_vars", poly.num_vars()}, {"terms", terms}}.dump() << "\n";
}

int run_stats(const std::string& literal, Format format) {
    const IntSeq seq = parse_seq(literal);
    const SeqClass cls = classify(seq);
    const Stats st = statistics(seq);
    if (format == Format::Json) {
        std::cout << json{{"seq", seq_to_string(seq)},
                          {"area", st.area},
                          {"di", st.di},
                          {"nv", st.nv},
                          {"dinv", st.dinv},
                          {"defc", st.defc},
                          {"affine", cls.affine},
                          {"ordinary_dyck", cls.ordinary_dyck},
                          {"dual", cls.dual},
                          {"reverse", cls.reverse}}
                         .dump()
                  << "\n";
        return 0;
    }
    const char sep = format == Format::Tsv ? '\t' : ' ';
    std::cout << "area" << sep << st.area << "\n"
              << "di" << sep << st.di << "\n"
              << "nv" << sep << st.nv << "\n"
              << "dinv" << sep << st.dinv << "\n"
              << "defc" << sep << st.defc << "\n"
              << "affine" << sep << (cls.affine ? 1 : 0) << "\n"
              << "ordinary_dyck" << sep << (cls.ordinary_dyck ? 1 : 0) << "\n"
              << "dual" << sep << (cls.dual ? 1 : 0) << "\n"
              << "reverse" << sep << (cls.reverse ? 1 : 0) << "\n";
    return 0;
}

int run_catalan(const std::string& mode, int n, int cap, Format format) {
    QtPoly poly;
    if (mode == "brute") {
        poly = brute_force_catalan(n, cap);
    } else if (mode == "two-column") {
        poly = two_column_catalan(n, cap);
    } else if (mode == "skeleton") {
        poly = low_deficit_catalan(n, cap);
    } else if (mode == "partition") {
        poly = partition_formula(n);
    } else {
        throw CLI::ValidationError("--mode", "expected brute, two-column, skeleton, or partition");
    }
    print_qtpoly(poly, format, "C_" + std::to_string(n) + " (" + mode + ")");
    return 0;
}

std::string annotated_cell(const StringRecord& record, std::size_t position) {
    std::string cell = seq_to_string(record.chain[position]);
    if (position > 0) {
        const int level = record.levels[position - 1];
        if (level != 3) cell += "@" + std::to_string(level);
    }
    return cell;
}

int run_strings(int n, int d, Format format) {
    const auto records = make_strings(n, d);
    if (format == Format::Json) {
        json out = json::array();
        for (const StringRecord& record : records) {
            json words = json::array();
            for (const IntSeq& word : record.chain) words.push_back(seq_to_string(word));
            out.push_back({{"start_area", area(record.start)},
                           {"words", words},
                           {"levels", record.levels}});
        }
        std::cout << json{{"n", n}, {"defc", d}, {"strings", out}}.dump() << "\n";
        return 0;
    }
    if (format == Format::Text) {
        for (std::size_t i = 0; i < records.size(); ++i) {
            const StringRecord& record = records[i];
            std::cout << "string " << (i + 1) << " (start area " << area(record.start) << ")\n";
            for (std::size_t j = 0; j < record.chain.size(); ++j) {
                std::cout << "  area " << area(record.chain[j]) << "  "
                          << seq_to_string(record.chain[j]);
                if (j > 0 && record.levels[j - 1] != 3)
                    std::cout << "  [level " << record.levels[j - 1] << "]";
                std::cout << "\n";
            }
        }
        return 0;
    }
    // TSV: one column per string, one row per area; exceptional steps mark
    // their target cell with @5 or @7.
    long long area_lo = -1, area_hi = -1;
    for (const StringRecord& record : records) {
        const long long lo = area(record.chain.front());
        const long long hi = area(record.chain.back());
        if (area_lo < 0 || lo < area_lo) area_lo = lo;
        if (hi > area_hi) area_hi = hi;
    }
    std::cout << "area";
    for (std::size_t i = 0; i < records.size(); ++i) std::cout << "\tstring " << (i + 1);
    std::cout << "\n";
    for (long long a = area_lo; a <= area_hi; ++a) {
        std::cout << a;
        for (const StringRecord& record : records) {
            std::cout << '\t';
            const long long start = area(record.chain.front());
            if (a >= start && a < start + static_cast<long long>(record.chain.size()))
                std::cout << annotated_cell(record, static_cast<std::size_t>(a - start));
        }
        std::cout << "\n";
    }
    return 0;
}

int run_tableau_insert(const std::string& factors_literal, Format format) {
    DualFactorization f;
    f.factors = parse_factors(factors_literal);
    const auto [p, q] = insert_factorization(f);
    if (format == Format::Json) {
        json prows = json::array(), qrows = json::array();
        for (const IntSeq& row : p.rows) prows.push_back(seq_to_string(row));
        for (const auto& row : q.rows) qrows.push_back(seq_to_string(row));
        std::cout << json{{"p", prows}, {"q", qrows}}.dump() << "\n";
        return 0;
    }
    const char sep = format == Format::Tsv ? '\t' : ' ';
    std::cout << "P" << sep << rows_to_string(p.rows) << "\n";
    std::cout << "Q" << sep << rows_to_string(q.rows) << "\n";
    return 0;
}

int run_tableau_extract(const std::string& p_literal, const std::string& q_literal,
                        Format format) {
    DyckTableau p{parse_rows(p_literal)};
    RecordingTableau q{parse_rows(q_literal)};
    const DualFactorization f = extract_factorization(p, q);
    if (format == Format::Json) {
        json factors = json::array();
        for (const IntSeq& factor : f.factors) factors.push_back(seq_to_string(factor));
        std::cout << json{{"factors", factors}}.dump() << "\n";
        return 0;
    }
    std::cout << factors_to_string(f.factors) << "\n";
    return 0;
}

int run_check(const std::string& which, bool fast, int threads, const std::string& data_dir,
              Format format) {
    std::vector<CheckReport> reports;
    const auto run_one = [&](const std::string& name) {
        if (name == "residual") {
            reports.push_back(residual_check(data_dir));
        } else if (name == "prefix") {
            reports.push_back(prefix_form_check(data_dir));
        } else if (name == "limited") {
            reports.push_back(limited_nonzero_check(data_dir));
        } else if (name == "east7") {
            East7Options options;
            options.fast = fast;
            options.threads = threads;
            reports.push_back(east7_window_check(data_dir, options));
        } else {
            throw CLI::ValidationError("check", "expected residual, limited, prefix, east7, or all");
        }
    };
    if (which == "all") {
        // Dependency-light order.
        for (const char* name : {"residual", "prefix", "limited", "east7"}) run_one(name);
    } else {
        run_one(which);
    }
    bool all_pass = true;
    if (format == Format::Json) {
        json out = json::array();
        for (const CheckReport& report : reports) {
            json counters = json::object();
            for (const auto& [label, value] : report.counters) counters[label] = value;
            json entry{{"name", report.name}, {"pass", report.pass}, {"counters", counters}};
            if (report.first_failure) entry["first_failure"] = *report.first_failure;
            out.push_back(entry);
            all_pass = all_pass && report.pass;
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const CheckReport& report : reports) {
            std::cout << "== " << report.name << " ==\n" << report.render();
            all_pass = all_pass && report.pass;
        }
        if (reports.size() > 1)
            std::cout << "overall status: " << (all_pass ? "PASS" : "FAIL") << "\n";
    }
    return all_pass ? 0 : 1;
}

int run_symfun_ds(const std::string& multiset_literal, int d, const std::string& mode, int nvars,
                  Format format) {
    const IntSeq multiset = parse_seq(multiset_literal);
    const FactorMode factor_mode = mode == "affine" ? FactorMode::Affine : FactorMode::Dual;
    print_truncpoly(dyck_symmetric_function(multiset, d, factor_mode, nvars), format);
    return 0;
}

int run_symfun_schur(const std::string& shape_literal, int nvars, Format format) {
    const IntSeq shape = parse_seq(shape_literal);
    print_truncpoly(schur(Partition::of(shape), nvars), format);
    return 0;
}

int run_symfun_verify(const std::string& multiset_literal, int d, int nvars, Format format) {
    const IntSeq multiset = parse_seq(multiset_literal);
    const int vars = nvars > 0 ? nvars : std::max<int>(1, static_cast<int>(multiset.size()));
    const ExpansionReport dual = verify_schur_expansion(multiset, d, vars, FactorMode::Dual);
    const ExpansionReport affine = verify_schur_expansion(multiset, d, vars, FactorMode::Affine);
    const ComplementReport complement = fundamental_complement_check(multiset, d, vars);
    const bool pass = dual.equal && affine.equal && complement.equal;
    if (format == Format::Json) {
        std::cout << json{{"dual_equal", dual.equal},
                          {"affine_equal", affine.equal},
                          {"complement_equal", complement.equal},
                          {"tableaux", dual.tableau_count},
                          {"pass", pass}}
                         .dump()
                  << "\n";
    } else {
        const char sep = format == Format::Tsv ? '\t' : ' ';
        std::cout << "dual expansion" << sep << (dual.equal ? "equal" : "DIFFERS") << "\n";
        std::cout << "affine expansion" << sep << (affine.equal ? "equal" : "DIFFERS") << "\n";
        std::cout << "descent complement" << sep << (complement.equal ? "equal" : "DIFFERS")
                  << "\n";
        std::cout << "tableaux" << sep << dual.tableau_count << "\n";
        std::cout << "status: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

int run_flat_middle(int n, int cap, Format format) {
    const FlatMiddleReport report = flat_middle_scan(n, cap);
    if (format == Format::Json) {
        json bands = json::array();
        for (const FlatBand& band : report.bands)
            bands.push_back({{"d", band.d},
                             {"j_lo", band.j_lo},
                             {"j_hi", band.j_hi},
                             {"constant", band.constant},
                             {"value", band.value.str()},
                             {"remark_range", band.in_remark_range}});
        std::cout << json{{"n", report.n},
                          {"remark_ok", report.remark_ok},
                          {"conjecture_ok", report.conjecture_ok},
                          {"bands", bands}}
                         .dump()
                  << "\n";
        return 0;
    }
    const char sep = format == Format::Tsv ? '\t' : ' ';
    for (const FlatBand& band : report.bands) {
        std::cout << "d=" << band.d << sep << "j=[" << band.j_lo << "," << band.j_hi << "]" << sep
                  << (band.constant ? "constant " + band.value.str() : "NOT CONSTANT") << sep
                  << (band.in_remark_range ? "guaranteed" : "conjectural") << "\n";
    }
    std::cout << "remark range: " << (report.remark_ok ? "PASS" : "FAIL") << "\n";
    std::cout << "conjecture range: " << (report.conjecture_ok ? "holds" : "fails") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dyck-sequence statistics, insertion bijections, q,t-Catalan formulas, and finite checkers"};
    app.require_subcommand(1);
    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format: text, tsv, or json")
        ->capture_default_str();
    int threads = 1;
    if (const char* env = std::getenv("DYCKLAB_THREADS")) threads = std::max(1, std::atoi(env));
    app.add_option("--threads", threads, "Worker threads for the heavy checkers");

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "Statistics and classification of a sequence");
    std::string stats_literal;
    stats_cmd->add_option("--seq", stats_literal, "Sequence literal, e.g. [0,1,2,1,0]")
        ->required();

    // catalan
    auto* catalan_cmd = app.add_subcommand("catalan", "q,t-Catalan polynomial formulas");
    std::string catalan_mode = "brute";
    int catalan_n = 0, catalan_cap = 12;
    catalan_cmd->add_option("--mode", catalan_mode, "brute | two-column | skeleton | partition")
        ->capture_default_str();
    catalan_cmd->add_option("--n", catalan_n, "Sequence length")->required();
    catalan_cmd->add_option("--cap", catalan_cap, "Enumeration cap")->capture_default_str();

    // strings
    auto* strings_cmd = app.add_subcommand("strings", "Lower-half up-string decomposition");
    int strings_n = 0, strings_d = 0;
    strings_cmd->add_option("--n", strings_n, "Sequence length")->required();
    strings_cmd->add_option("--defc", strings_d, "Deficit")->required();

    // tableau
    auto* tableau_cmd = app.add_subcommand("tableau", "Tableau insertion and extraction");
    tableau_cmd->require_subcommand(1);
    auto* tab_insert = tableau_cmd->add_subcommand("insert", "Insert a dual Dyck factorization");
    std::string factors_literal;
    tab_insert->add_option("--factors", factors_literal, "Factors, e.g. [0,2,4]|[1,3]")
        ->required();
    auto* tab_extract = tableau_cmd->add_subcommand("extract", "Recover the factorization");
    std::string p_literal, q_literal;
    tab_extract->add_option("--p", p_literal, "Insertion tableau rows, e.g. [0,2,4]/[1,3]")
        ->required();
    tab_extract->add_option("--q", q_literal, "Recording tableau rows")->required();

    // symfun
    auto* symfun_cmd = app.add_subcommand("symfun", "Truncated symmetric functions");
    symfun_cmd->require_subcommand(1);
    auto* ds_cmd = symfun_cmd->add_subcommand("ds", "Dyck symmetric function");
    std::string ds_multiset, ds_mode = "dual";
    int ds_d = 0, ds_nvars = 0;
    ds_cmd->add_option("--multiset", ds_multiset, "Entry multiset, e.g. [0,1,1]")->required();
    ds_cmd->add_option("--d", ds_d, "di statistic")->capture_default_str();
    ds_cmd->add_option("--mode", ds_mode, "affine | dual")->capture_default_str();
    ds_cmd->add_option("--nvars", ds_nvars, "Number of variables")->required();
    auto* schur_cmd = symfun_cmd->add_subcommand("schur", "Schur polynomial via tableaux");
    std::string schur_shape;
    int schur_nvars = 0;
    schur_cmd->add_option("--shape", schur_shape, "Partition, e.g. [2,1]")->required();
    schur_cmd->add_option("--nvars", schur_nvars, "Number of variables")->required();
    auto* verify_cmd = symfun_cmd->add_subcommand("verify", "Schur expansion and complement checks");
    std::string verify_multiset;
    int verify_d = 0, verify_nvars = 0;
    verify_cmd->add_option("--multiset", verify_multiset, "Entry multiset")->required();
    verify_cmd->add_option("--d", verify_d, "di statistic")->capture_default_str();
    verify_cmd->add_option("--nvars", verify_nvars, "Number of variables (default |S|)");

    // check
    auto* check_cmd = app.add_subcommand("check", "Finite checkers with golden counters");
    std::string check_which;
    bool check_fast = false;
    std::string data_dir = default_data_dir();
    check_cmd->add_option("which", check_which, "residual | limited | prefix | east7 | all")
        ->required();
    check_cmd->add_flag("--fast", check_fast, "Sample the heavy finite searches");
    check_cmd->add_option("--data-dir", data_dir, "Golden fixture directory")
        ->capture_default_str();

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "Coefficient scans");
    scan_cmd->require_subcommand(1);
    auto* flat_cmd = scan_cmd->add_subcommand("flat-middle", "Constant middle-band scan");
    int flat_n = 0, flat_cap = 12;
    flat_cmd->add_option("--n", flat_n, "Sequence length")->required();
    flat_cmd->add_option("--cap", flat_cap, "Enumeration cap")->capture_default_str();

    // Allow global options (--format, --threads) after a subcommand name.
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands({})) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        const Format format = parse_format(format_name);
        if (*stats_cmd) return run_stats(stats_literal, format);
        if (*catalan_cmd) return run_catalan(catalan_mode, catalan_n, catalan_cap, format);
        if (*strings_cmd) return run_strings(strings_n, strings_d, format);
        if (*tableau_cmd) {
            if (*tab_insert) return run_tableau_insert(factors_literal, format);
            return run_tableau_extract(p_literal, q_literal, format);
        }
        if (*symfun_cmd) {
            if (*ds_cmd) return run_symfun_ds(ds_multiset, ds_d, ds_mode, ds_nvars, format);
            if (*schur_cmd) return run_symfun_schur(schur_shape, schur_nvars, format);
            return run_symfun_verify(verify_multiset, verify_d, verify_nvars, format);
        }
        if (*check_cmd) return run_check(check_which, check_fast, threads, data_dir, format);
        if (*scan_cmd) return run_flat_middle(flat_n, flat_cap, format);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
