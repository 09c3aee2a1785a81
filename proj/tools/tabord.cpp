#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tabord/embeddings.hpp"
#include "tabord/harness.hpp"
#include "tabord/io.hpp"

using namespace tabord;

namespace {

constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_primes(const std::string& text)
{
    std::vector<int> primes;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ','))
        primes.push_back(std::stoi(token));
    return primes;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    return Json::parse(in);
}

std::string enumerate_output(const std::string& kind, int r, const std::string& shape, const std::string& beta,
                             const std::string& gamma, const std::string& format)
{
    std::ostringstream out;
    if (kind == "syt-weight" || kind == "syt-shape") {
        std::vector<StandardTableau> elems;
        if (kind == "syt-weight") {
            if (r < 0)
                throw UsageError("syt-weight needs --r");
            elems = enumerate_syt_weight(r);
        } else {
            if (shape.empty())
                throw UsageError("syt-shape needs --beta (the shape)");
            elems = enumerate_syt(Partition::parse(shape));
        }
        for (const auto& t : elems)
            out << (format == "text" ? t.to_string() : syt_to_json(t).dump()) << "\n";
        return out.str();
    }
    if (beta.empty() || gamma.empty())
        throw UsageError("lr-rook needs --beta and --gamma");
    const Partition b = Partition::parse(beta);
    const Partition g = Partition::parse(gamma);
    if (!contains(b, g) || !is_rook_strip(SkewShape(b, g)))
        throw UsageError("beta \\ gamma is not a rook strip");
    for (const auto& t : enumerate_lr_rook(b, g))
        out << (format == "text" ? chain_to_string(t.chain()) : lr_to_json(t).dump()) << "\n";
    return out.str();
}

std::string hasse_output(const std::string& kind, int r, const std::string& beta, const std::string& gamma,
                         const std::string& order, int workers)
{
    if (order != "box" && order != "dom")
        throw UsageError("--order must be box or dom");
    std::vector<std::string> keys;
    std::vector<std::string> labels;
    if (kind == "syt") {
        if (r < 0)
            throw UsageError("hasse syt needs --r");
        const auto elems = enumerate_syt_weight(r);
        for (const auto& t : elems) {
            keys.push_back(syt_to_json(t).dump());
            labels.push_back(t.to_string());
        }
        return hasse_dot(order == "box" ? box_table_syt(elems, workers) : dom_table_syt(elems), keys, labels);
    }
    if (beta.empty() || gamma.empty())
        throw UsageError("hasse lr-rook needs --beta and --gamma");
    const Partition b = Partition::parse(beta);
    const Partition g = Partition::parse(gamma);
    if (!contains(b, g) || !is_rook_strip(SkewShape(b, g)))
        throw UsageError("beta \\ gamma is not a rook strip");
    const auto elems = enumerate_lr_rook(b, g);
    for (const auto& t : elems) {
        keys.push_back(lr_to_json(t).dump());
        labels.push_back(chain_to_string(t.chain()));
    }
    return hasse_dot(order == "box" ? box_table_lr(elems, workers) : dom_table_lr(elems), keys, labels);
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw UsageError("cannot write " + out_path);
    out << text;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Box and dominance orders on tableaux, invariant subspaces and exhaustive checks"};
    app.require_subcommand(1);

    int r = -1;
    std::string beta, gamma, order = "dom", field, format, out_path;
    int max_height = -1;
    int max_beta_weight = -1;
    int workers = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--workers", workers, "worker threads (default: TABLEAU_ORDERS_WORKERS or all cores)");
        sub->add_option("--out", out_path, "write output to this file");
    };

    auto* enumerate = app.add_subcommand("enumerate", "list tableaux as JSON lines");
    std::string enum_kind;
    enumerate->add_option("kind", enum_kind, "syt-weight | syt-shape | lr-rook")
        ->required()
        ->check(CLI::IsMember({"syt-weight", "syt-shape", "lr-rook"}));
    enumerate->add_option("--r", r, "weight");
    enumerate->add_option("--beta", beta, "outer shape, or the shape for syt-shape, e.g. [3,2,2]");
    enumerate->add_option("--gamma", gamma, "inner shape");
    enumerate->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
    add_common(enumerate);

    auto* check = app.add_subcommand("check", "run an exhaustive check");
    std::string check_name;
    check->add_option("name", check_name, "check name or 'all'")->required();
    check->add_option("--r", r, "single weight for box-eq-dom; upper bound for f-map and phi-orders");
    check->add_option("--max-beta-weight", max_beta_weight, "bound on |beta| for phi-orders and ext-witness");
    check->add_option("--max-height", max_height, "bound on m_r for pole, D(m,n) and sequence checks");
    check->add_option("--field", field, "comma separated primes, default 2,3,5");
    check->add_option("--format", format, "text | json")->check(CLI::IsMember({"json", "text"}));
    add_common(check);

    auto* hasse_cmd = app.add_subcommand("hasse", "cover relations in DOT form");
    std::string hasse_kind;
    hasse_cmd->add_option("kind", hasse_kind, "syt | lr-rook")->required()->check(CLI::IsMember({"syt", "lr-rook"}));
    hasse_cmd->add_option("--r", r, "weight");
    hasse_cmd->add_option("--beta", beta, "outer shape");
    hasse_cmd->add_option("--gamma", gamma, "inner shape");
    hasse_cmd->add_option("--order", order, "box | dom")->check(CLI::IsMember({"box", "dom"}));
    hasse_cmd->add_option("--format", format, "dot")->check(CLI::IsMember({"dot"}));
    add_common(hasse_cmd);

    auto* hom = app.add_subcommand("hom", "dimension of Hom between two embeddings");
    std::string x_path, z_path;
    hom->add_option("X", x_path, "embedding JSON file")->required();
    hom->add_option("Z", z_path, "embedding JSON file")->required();
    hom->add_option("--field", field, "expected characteristic");
    add_common(hom);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (workers <= 0)
            workers = default_workers();

        if (*enumerate) {
            emit(enumerate_output(enum_kind, r, enum_kind == "syt-shape" ? beta : "", beta, gamma,
                                  format.empty() ? "json" : format),
                 out_path);
            return 0;
        }

        if (*hasse_cmd) {
            emit(hasse_output(hasse_kind, r, beta, gamma, order, workers), out_path);
            return 0;
        }

        if (*hom) {
            const Embedding x = embedding_from_json(read_json_file(x_path));
            const Embedding z = embedding_from_json(read_json_file(z_path));
            if (x.field().prime() != z.field().prime())
                throw UsageError("embeddings are over different fields");
            if (!field.empty() && std::stoi(field) != x.field().prime())
                throw UsageError("embeddings are not over the requested field");
            emit(std::to_string(hom_dim_embeddings(x, z)) + "\n", out_path);
            return 0;
        }

        RunConfig cfg;
        cfg.workers = workers;
        cfg.output_format = format.empty() ? "text" : format;
        if (!field.empty())
            cfg.field_primes = parse_primes(field);
        if (max_height > 0)
            cfg.max_height = max_height;
        if (max_beta_weight > 0) {
            cfg.max_beta_weight = max_beta_weight;
            cfg.ext_max_beta_weight = max_beta_weight;
        }
        if (r >= 0) {
            cfg.min_weight_r = cfg.max_weight_r = r;
            cfg.f_map_max_r = r;
            cfg.f_map_box_max_r = std::min(cfg.f_map_box_max_r, r);
            cfg.phi_max_r = r;
        }
        try {
            cfg.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        std::vector<std::string> names;
        if (check_name == "all")
            names = check_names();
        else if (std::find(check_names().begin(), check_names().end(), check_name) != check_names().end())
            names = {check_name};
        else
            throw UsageError("unknown check '" + check_name + "'");

        bool all_pass = true;
        std::string text;
        Json reports = Json::array();
        for (const auto& name : names) {
            const CheckReport report = run_check(name, cfg);
            all_pass = all_pass && report.pass;
            if (cfg.output_format == "json")
                reports.push_back(report.to_json());
            else
                text += report.to_text();
        }
        if (cfg.output_format == "json")
            text = (names.size() == 1 ? reports.front() : reports).dump(2) + "\n";
        emit(text, out_path);
        return all_pass ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
