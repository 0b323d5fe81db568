#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bernden/tables.hpp"

namespace {

uint64_t parse_or_name(const std::string& text, const char* flag) {
    try {
        return bernden::parse_limit(text);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(std::string(flag) + ": cannot parse '" + text + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bernoulli denominator class tables and witness searches"};
    app.require_subcommand(1);

    std::string table_id;
    std::string witness_kind;
    std::string limit_str = "100000";
    std::string format_str = "csv";
    std::string precision_str = "paper";
    std::string segment_str;
    std::string checkpoint_file;
    std::vector<std::string> checkpoint_strs;
    std::vector<std::string> moduli_strs;
    std::vector<std::string> target_strs;
    uint64_t workers = 1;
    uint64_t max_first = 0;
    bool show_tset = false;

    auto* table = app.add_subcommand("table", "regenerate one of the counting tables");
    table->add_option("id", table_id, "one of: " + bernden::table_id_names())->required();
    table->add_option("--limit", limit_str, "count bound; accepts 1e7-style shorthand");
    table->add_option("--format", format_str, "csv, tsv, or markdown");
    table->add_option("--precision", precision_str,
                      "paper (printed-table rounding, leading zero stripped) or full");
    table->add_option("--checkpoints", checkpoint_strs, "comma-separated count bounds")
        ->delimiter(',');
    auto* max_first_opt =
        table->add_option("--max-first", max_first,
                          "largest class least-element to report (default 112; 10 for s-residues)");
    table->add_option("--moduli", moduli_strs, "comma-separated moduli for s-residues")
        ->delimiter(',');
    table->add_option("--targets", target_strs, "comma-separated cofactors for p-partition")
        ->delimiter(',');
    table->add_option("--segment-size", segment_str, "even subscripts per sieve segment");
    table->add_option("--workers", workers, "sieve worker threads")
        ->envname("BERNDEN_WORKERS");
    table->add_option("--checkpoint-file", checkpoint_file,
                      "binary sieve record file; resumes a partial run and extends it");
    table->add_flag("--show-tset", show_tset, "include the prime-set column in s-counts");

    auto* witness = app.add_subcommand("witness", "self-verifying witness families");
    witness->add_option("kind", witness_kind, "one of: " + bernden::witness_kind_names())
        ->required();
    witness->add_option("--limit", limit_str, "prime bound; accepts 1e7-style shorthand");
    witness->add_option("--format", format_str, "csv, tsv, or markdown");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        auto format = bernden::parse_format(format_str);
        if (!format)
            throw std::invalid_argument("--format must be csv, tsv, or markdown, not '" +
                                        format_str + "'");
        uint64_t limit = parse_or_name(limit_str, "--limit");

        if (table->parsed()) {
            auto id = bernden::parse_table_id(table_id);
            if (!id)
                throw std::invalid_argument("unknown table id '" + table_id + "' (expected " +
                                            bernden::table_id_names() + ")");
            auto precision = bernden::parse_precision(precision_str);
            if (!precision)
                throw std::invalid_argument("--precision must be paper or full, not '" +
                                            precision_str + "'");
            bernden::TableRequest req;
            req.id = *id;
            req.limit = limit;
            req.format = *format;
            req.precision = *precision;
            for (const auto& s : checkpoint_strs)
                req.checkpoints.push_back(parse_or_name(s, "--checkpoints"));
            req.max_first = max_first_opt->count()
                                ? max_first
                                : (*id == bernden::TableId::SResidues ? 10 : 112);
            if (!moduli_strs.empty()) {
                req.moduli.clear();
                for (const auto& s : moduli_strs)
                    req.moduli.push_back(parse_or_name(s, "--moduli"));
            }
            if (!target_strs.empty()) {
                req.targets.clear();
                for (const auto& s : target_strs)
                    req.targets.push_back(parse_or_name(s, "--targets"));
            }
            if (!segment_str.empty())
                req.segment_size = parse_or_name(segment_str, "--segment-size");
            req.workers = workers;
            req.checkpoint_file = checkpoint_file;
            req.show_tset = show_tset;
            return bernden::run_table(req, std::cout, std::cerr);
        }

        auto kind = bernden::parse_witness_kind(witness_kind);
        if (!kind)
            throw std::invalid_argument("unknown witness kind '" + witness_kind + "' (expected " +
                                        bernden::witness_kind_names() + ")");
        return bernden::run_witness(*kind, limit, *format, std::cout);
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "try a smaller --segment-size or --limit\n";
        return 3;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n"
                  << "try a smaller --segment-size or --limit\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
