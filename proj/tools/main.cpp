#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

#include "opforge/checks.hpp"
#include "opforge/diff_embed.hpp"
#include "opforge/expansion.hpp"
#include "opforge/koszul.hpp"
#include "opforge/normal_forms.hpp"
#include "opforge/presentation.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitVerify = 4;

struct Source {
    std::string builtin;
    std::string file;

    opforge::Presentation resolve() const {
        if (!builtin.empty() && !file.empty())
            throw std::invalid_argument("use either --builtin or --file, not both");
        if (!builtin.empty()) return opforge::builtin_presentation(builtin);
        if (!file.empty()) return opforge::load_presentation(file);
        throw std::invalid_argument("a presentation is required (--builtin or --file)");
    }
};

struct ArityRange {
    int lo = 1;
    int hi = 1;
};

ArityRange parse_arity(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad arity: " + text);
    }
}

void require_within_cap(const opforge::Signature& sig, int n, bool force) {
    const int cap = opforge::default_arity_cap(sig);
    if (n > cap && !force) throw opforge::ArityCapExceeded(n, cap);
}

int run_dim(const Source& src, const std::string& arity, const std::string& format, bool force) {
    const opforge::Presentation p = src.resolve();
    const ArityRange r = parse_arity(arity);
    if (r.lo < 1 || r.hi < r.lo) throw std::invalid_argument("arity range must be ascending and >= 1");
    for (int n = r.lo; n <= r.hi; ++n) require_within_cap(p.sig, n, force);

    std::vector<std::pair<int, int>> dims;
    for (int n = r.lo; n <= r.hi; ++n) {
        std::cerr << "computing dim(" << p.name << ", " << n << ")...\n";
        dims.push_back({n, opforge::component_dim(p, n)});
    }
    if (format == "json") {
        json out{{"presentation", p.name}, {"dims", json::array()}};
        for (auto [n, d] : dims) out["dims"].push_back({{"n", n}, {"dim", d}});
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "presentation,n,dim\n";
        for (auto [n, d] : dims) std::cout << p.name << "," << n << "," << d << "\n";
    } else {
        for (auto [n, d] : dims)
            std::cout << "dim(" << p.name << ", " << n << ") = " << d << "\n";
    }
    return kExitOk;
}

int run_dual(const Source& src) {
    const opforge::Presentation p = src.resolve();
    if (!p.quadratic()) {
        std::cerr << "error: non-quadratic presentation\n";
        return kExitInput;
    }
    std::cout << opforge::to_text(opforge::dual_presentation(p));
    return kExitOk;
}

int run_nf(const std::string& variety, const std::string& term) {
    const opforge::Signature sig = opforge::one_op_signature();
    const opforge::Polynomial q = opforge::parse_polynomial(term, sig);
    opforge::Polynomial result;
    if (variety == "nov_s")
        result = opforge::nf_nov_s(q);
    else if (variety == "bicom_s")
        result = opforge::nf_bicom_s(q);
    else
        throw std::invalid_argument("--variety must be nov_s or bicom_s");
    std::cout << opforge::to_string(result, sig) << "\n";
    return kExitOk;
}

int run_verify(const std::string& suite, int arity, const std::string& format) {
    opforge::CheckOptions opts;
    opts.arity = arity;
    const auto results = opforge::run_check_suite(suite, opts);
    bool all = true;
    if (format == "json") {
        json out = json::array();
        for (const auto& r : results) {
            out.push_back({{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            all = all && r.pass;
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail << "\n";
            all = all && r.pass;
        }
    }
    return all ? kExitOk : kExitVerify;
}

int run_table(const std::string& arity, const std::string& format, bool force) {
    const ArityRange r = parse_arity(arity);
    if (r.lo < 1 || r.hi < r.lo) throw std::invalid_argument("arity range must be ascending and >= 1");
    std::vector<std::tuple<std::string, int, int>> rows;
    for (const auto& name : opforge::builtin_names()) {
        const opforge::Presentation p = opforge::builtin_presentation(name);
        for (int n = r.lo; n <= r.hi; ++n) {
            require_within_cap(p.sig, n, force);
            std::cerr << "computing dim(" << name << ", " << n << ")...\n";
            rows.push_back({name, n, opforge::component_dim(p, n)});
        }
    }
    if (format == "json") {
        json out = json::array();
        for (const auto& [name, n, d] : rows)
            out.push_back({{"presentation", name}, {"n", n}, {"dim", d}});
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "presentation,n,dim\n";
        for (const auto& [name, n, d] : rows) std::cout << name << "," << n << "," << d << "\n";
    }
    return kExitOk;
}

int run_embed(const std::string& map, const std::string& term) {
    if (map == "tau") {
        const auto q = opforge::parse_polynomial(term, opforge::two_op_signature());
        const auto img = opforge::tau(q);
        std::cout << opforge::to_string(img) << "\n";
        const auto w = opforge::weight_profile(img);
        if (!w.entries.empty())
            std::cerr << "weights: " << (w.homogeneous ? "homogeneous" : "inhomogeneous") << " ("
                      << w.entries.front().total_d << "," << w.entries.front().total_pd << ")\n";
    } else if (map == "tau_nov") {
        const auto q = opforge::parse_polynomial(term, opforge::one_op_signature());
        std::cout << opforge::to_string(opforge::tau_nov(q)) << "\n";
    } else {
        throw std::invalid_argument("--map must be tau or tau_nov");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"operad-forge: exact computations for varieties of binary algebras"};
    app.require_subcommand(1);

    Source src;
    std::string arity = "1";
    std::string format = "table";
    bool force = false;
    std::string variety, term, suite = "all", map = "tau";

    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("--builtin", src.builtin, "builtin presentation name");
        cmd->add_option("--file", src.file, "presentation file path");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "table|json|csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
    };

    auto* dim = app.add_subcommand("dim", "multilinear component dimensions");
    add_source(dim);
    dim->add_option("--arity", arity, "arity N or range N..M");
    add_format(dim);
    dim->add_flag("--force", force, "override the arity cap");

    auto* dual = app.add_subcommand("dual", "Koszul dual of a quadratic presentation");
    add_source(dual);

    auto* nf = app.add_subcommand("nf", "normal form in the closed-form bases");
    nf->add_option("--variety", variety, "nov_s|bicom_s")->required();
    nf->add_option("term", term, "term or polynomial to normalise")->required();

    auto* verify = app.add_subcommand("verify", "run a named check suite");
    verify->add_option("suite", suite, "check suite name or 'all'");
    verify->add_option("--arity", arity, "arity bound for arity-parameterised checks");
    add_format(verify);

    auto* table = app.add_subcommand("table", "dimension table across builtins");
    table->add_option("--arity", arity, "arity N or range N..M");
    add_format(table);
    table->add_flag("--force", force, "override the arity cap");

    auto* embed = app.add_subcommand("embed", "differential-polynomial image of a term");
    embed->add_option("--map", map, "tau|tau_nov");
    embed->add_option("term", term, "term or polynomial to embed")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (dim->parsed()) return run_dim(src, arity, format, force);
        if (dual->parsed()) return run_dual(src);
        if (nf->parsed()) return run_nf(variety, term);
        if (verify->parsed()) {
            const ArityRange r = parse_arity(arity);
            return run_verify(suite, r.hi, format);
        }
        if (table->parsed()) return run_table(arity, format, force);
        if (embed->parsed()) return run_embed(map, term);
    } catch (const opforge::ArityCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
