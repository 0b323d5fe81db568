#include "bernden/tables.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "bernden/arith.hpp"
#include "bernden/denom_sieve.hpp"
#include "bernden/setstats.hpp"
#include "bernden/staudt_clausen.hpp"

namespace bernden {

namespace {

class Emitter {
  public:
    Emitter(std::ostream& out, TableFormat format) : out_(out), format_(format) {}

    void header(const std::vector<std::string>& cells) {
        line(cells);
        if (format_ == TableFormat::Markdown) {
            out_ << "|";
            for (size_t i = 0; i < cells.size(); ++i) out_ << "---|";
            out_ << "\n";
        }
    }

    void row(const std::vector<std::string>& cells) { line(cells); }

  private:
    void line(const std::vector<std::string>& cells) {
        if (format_ == TableFormat::Markdown) {
            out_ << "|";
            for (const auto& c : cells) out_ << " " << c << " |";
        } else {
            const char sep = format_ == TableFormat::Csv ? ',' : '\t';
            for (size_t i = 0; i < cells.size(); ++i) {
                if (i) out_ << sep;
                out_ << cells[i];
            }
        }
        out_ << "\n";
    }

    std::ostream& out_;
    TableFormat format_;
};

std::string num(uint64_t v) { return std::to_string(v); }

// paper precision: fixed decimals, leading zero stripped (".053", ".1183")
std::string ratio_cell(double v, Precision precision, int decimals) {
    char buf[64];
    if (precision == Precision::Full) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    std::string s = buf;
    if (s.size() > 1 && s[0] == '0') s.erase(s.begin());
    return s;
}

const char* table_name(TableId id) {
    switch (id) {
        case TableId::SCounts: return "s-counts";
        case TableId::SResidues: return "s-residues";
        case TableId::FCount: return "f-count";
        case TableId::DCount: return "d-count";
        case TableId::PPartition: return "p-partition";
        case TableId::DpNotInD: return "dp-not-in-d";
        case TableId::DPlusOne: return "d-plus-one";
    }
    return "?";
}

uint64_t min_limit(TableId id) {
    switch (id) {
        case TableId::SCounts: return 2;
        case TableId::SResidues: return 2;
        case TableId::FCount: return 2;
        case TableId::DCount: return 6;
        case TableId::PPartition: return 3;
        case TableId::DpNotInD: return 3;
        case TableId::DPlusOne: return 7;
    }
    return 2;
}

std::vector<uint64_t> effective_checkpoints(const TableRequest& req) {
    if (req.checkpoints.empty()) return {req.limit};
    return req.checkpoints;
}

SieveConfig make_config(const TableRequest& req, uint64_t limit) {
    SieveConfig cfg;
    cfg.limit = limit;
    if (req.segment_size != 0) cfg.segment_size = req.segment_size;
    cfg.workers = req.workers;
    return cfg;
}

void validate(const TableRequest& req) {
    uint64_t lo = min_limit(req.id);
    if (req.limit < lo)
        throw std::invalid_argument("--limit must be >= " + std::to_string(lo) + " for " +
                                    table_name(req.id));
    if (!req.checkpoints.empty()) {
        if (!std::is_sorted(req.checkpoints.begin(), req.checkpoints.end()))
            throw std::invalid_argument("--checkpoints must be ascending");
        if (req.checkpoints.front() < lo)
            throw std::invalid_argument("--checkpoints entries must be >= " + std::to_string(lo) +
                                        " for " + table_name(req.id));
        if (req.checkpoints.back() > req.limit)
            throw std::invalid_argument("--checkpoints entries must not exceed --limit");
    }
    if (req.workers < 1) throw std::invalid_argument("--workers must be >= 1");
    if (req.segment_size != 0 && (req.segment_size < 2 || req.segment_size % 2 != 0))
        throw std::invalid_argument("--segment-size must be even and >= 2");
    if (!req.checkpoint_file.empty() &&
        (req.id == TableId::DCount || req.id == TableId::DpNotInD || req.id == TableId::DPlusOne))
        throw std::invalid_argument(std::string("--checkpoint-file is not supported for ") +
                                    table_name(req.id) + " (no bulk sieve involved)");
    if (req.id == TableId::PPartition)
        for (uint64_t t : req.targets)
            if (t < 2 || t % 2 != 0) throw std::invalid_argument("--targets must be even");
    if (req.id == TableId::SResidues)
        for (uint64_t m : req.moduli)
            if (m == 0) throw std::invalid_argument("--moduli must be positive");
}

void s_counts_table(const TableRequest& req, Emitter& em) {
    auto cps = effective_checkpoints(req);
    auto reports =
        s_class_counts(make_config(req, req.limit), req.max_first, cps, req.checkpoint_file);
    std::vector<std::string> head = {"first", "second"};
    if (req.show_tset) head.push_back("t_set");
    for (uint64_t cp : cps) head.push_back("count_" + num(cp));
    em.header(head);
    for (const auto& r : reports) {
        std::vector<std::string> cells = {num(r.first), r.second ? num(*r.second) : "-"};
        if (req.show_tset) cells.push_back(r.t_set.to_string());
        for (const auto& [bound, count] : r.counts) cells.push_back(num(count));
        em.row(cells);
    }
}

void s_residues_table(const TableRequest& req, Emitter& em) {
    if (!req.checkpoints.empty() && req.checkpoints != std::vector<uint64_t>{req.limit})
        throw std::invalid_argument("--checkpoints is not supported for s-residues");
    em.header({"first", "total", "modulus", "class", "count"});
    SieveConfig cfg = make_config(req, req.limit);
    for (uint64_t f = 2; f <= req.max_first; f += 2) {
        if (t_class(f).lambda() != f) continue;
        ResidueReport rep = residue_statistics(cfg, f, req.moduli, req.checkpoint_file);
        for (const auto& pm : rep.moduli)
            for (uint64_t c = 0; c < pm.modulus; ++c)
                em.row({num(f), num(rep.total), num(pm.modulus), num(c),
                        num(pm.class_counts[c])});
    }
}

void f_count_table(const TableRequest& req, Emitter& em) {
    auto cps = effective_checkpoints(req);
    const bool with_bound = cps.size() > 1;
    std::vector<std::string> head;
    if (with_bound) head.push_back("bound");
    head.push_back("count");
    head.push_back("ratio");
    em.header(head);

    std::vector<uint64_t> small, large;
    for (uint64_t b : cps) (b < 16 ? small : large).push_back(b);

    auto emit = [&](uint64_t bound, uint64_t count, const std::string& ratio) {
        std::vector<std::string> cells;
        if (with_bound) cells.push_back(num(bound));
        cells.push_back(num(count));
        cells.push_back(ratio);
        em.row(cells);
    };
    if (!small.empty()) {
        auto firsts = first_subscripts_upto(small.back());
        for (uint64_t b : small) {
            uint64_t count = static_cast<uint64_t>(
                std::upper_bound(firsts.begin(), firsts.end(), b) - firsts.begin());
            emit(b, count, "-");  // the reference needs ln ln b > 0
        }
    }
    if (!large.empty())
        for (const auto& r :
             count_first_subscripts(make_config(req, large.back()), large, req.checkpoint_file))
            emit(r.bound, r.count, ratio_cell(r.ratio, req.precision, 3));
}

void d_count_table(const TableRequest& req, Emitter& em) {
    auto cps = effective_checkpoints(req);
    const bool with_bound = cps.size() > 1;
    std::vector<std::string> head;
    if (with_bound) head.push_back("bound");
    head.push_back("count");
    head.push_back("ratio");
    em.header(head);
    for (const auto& r : count_denominators(cps)) {
        std::vector<std::string> cells;
        if (with_bound) cells.push_back(num(r.bound));
        cells.push_back(num(r.count));
        cells.push_back(ratio_cell(r.ratio, req.precision, 3));
        em.row(cells);
    }
}

void p_partition_table(const TableRequest& req, Emitter& em) {
    auto cps = effective_checkpoints(req);
    const bool with_bound = cps.size() > 1;
    std::vector<std::string> head;
    if (with_bound) head.push_back("bound");
    head.push_back("d");
    head.push_back("count");
    head.push_back("fraction");
    em.header(head);
    for (uint64_t b : cps) {
        auto cells = partition_counts(make_config(req, b), req.targets, req.checkpoint_file);
        for (const auto& cell : cells) {
            std::vector<std::string> row;
            if (with_bound) row.push_back(num(b));
            row.push_back(num(cell.target));
            row.push_back(num(cell.count));
            row.push_back(ratio_cell(cell.fraction, req.precision, 4));
            em.row(row);
        }
    }
}

void dp_not_in_d_table(const TableRequest& req, Emitter& em) {
    auto cps = effective_checkpoints(req);
    const bool with_bound = cps.size() > 1;
    std::vector<std::string> head;
    if (with_bound) head.push_back("bound");
    head.push_back("count");
    head.push_back("ratio");
    em.header(head);
    for (uint64_t b : cps) {
        CountingReport r = count_cofactor_not_denominator(b);
        std::vector<std::string> cells;
        if (with_bound) cells.push_back(num(b));
        cells.push_back(num(r.count));
        cells.push_back(ratio_cell(r.ratio, req.precision, 3));
        em.row(cells);
    }
}

void d_plus_one_table(const TableRequest& req, Emitter& em) {
    auto cps = effective_checkpoints(req);
    const bool with_bound = cps.size() > 1;
    std::vector<std::string> head;
    if (with_bound) head.push_back("bound");
    for (const char* c : {"composite", "prime", "composite_fraction", "prime_fraction"})
        head.push_back(c);
    em.header(head);
    for (uint64_t b : cps) {
        SplitReport r = d_plus_one_split(b);
        std::vector<std::string> cells;
        if (with_bound) cells.push_back(num(b));
        cells.push_back(num(r.composite_count));
        cells.push_back(num(r.prime_count));
        cells.push_back(ratio_cell(r.composite_fraction, req.precision, 3));
        cells.push_back(ratio_cell(r.prime_fraction, req.precision, 3));
        em.row(cells);
    }
}

}  // namespace

int run_table(const TableRequest& req, std::ostream& out, std::ostream& err) {
    validate(req);
    if (req.limit >= 2'000'000 &&
        (req.id == TableId::SCounts || req.id == TableId::SResidues ||
         req.id == TableId::FCount || req.id == TableId::PPartition))
        err << table_name(req.id) << ": sieving even subscripts up to " << req.limit << "\n";
    Emitter em(out, req.format);
    switch (req.id) {
        case TableId::SCounts: s_counts_table(req, em); break;
        case TableId::SResidues: s_residues_table(req, em); break;
        case TableId::FCount: f_count_table(req, em); break;
        case TableId::DCount: d_count_table(req, em); break;
        case TableId::PPartition: p_partition_table(req, em); break;
        case TableId::DpNotInD: dp_not_in_d_table(req, em); break;
        case TableId::DPlusOne: d_plus_one_table(req, em); break;
    }
    return 0;
}

int run_witness(WitnessKind kind, uint64_t limit, TableFormat format, std::ostream& out) {
    Emitter em(out, format);
    switch (kind) {
        case WitnessKind::NotInD: {
            if (limit < 3) throw std::invalid_argument("--limit must be >= 3 for not-in-d");
            em.header({"q", "p", "d_p", "lambda_d_p", "p_minus_1"});
            for (const auto& w : witness_not_in_denominators(limit))
                em.row({num(w.q), num(w.p), w.d_p.get_str(), num(w.lambda_d_p), num(w.p - 1)});
            break;
        }
        case WitnessKind::InD: {
            if (limit < 43) throw std::invalid_argument("--limit must be >= 43 for in-d");
            em.header({"r", "q", "p", "lambda_p_minus_1", "denominator_2r"});
            for (const auto& w : witness_in_denominators(limit))
                em.row({num(w.r), num(w.q), num(w.p), num(w.lambda_p_minus_1),
                        num(w.denominator_2r)});
            break;
        }
        case WitnessKind::Germain: {
            if (limit < 3) throw std::invalid_argument("--limit must be >= 3 for germain");
            em.header({"p", "q", "denominator_2p"});
            for (uint64_t p : germain_primes(limit)) {
                uint64_t q = 2 * p + 1;
                Denom den = denominator(2 * p);
                if (!mpz_divisible_ui_p(den.value.get_mpz_t(), q))
                    throw std::logic_error("germain witness failed verification at p=" +
                                           std::to_string(p));
                em.row({num(p), num(q), den.value.get_str()});
            }
            break;
        }
    }
    return 0;
}

uint64_t parse_limit(const std::string& text) {
    const auto bad = [&] {
        return std::invalid_argument("cannot parse '" + text + "' as a count bound");
    };
    if (text.empty()) throw bad();
    size_t epos = text.find_first_of("eE");
    std::string mant = text.substr(0, epos == std::string::npos ? text.size() : epos);
    std::string expo = epos == std::string::npos ? "" : text.substr(epos + 1);
    if (mant.empty() || (epos != std::string::npos && expo.empty())) throw bad();
    for (char c : mant)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    for (char c : expo)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    if (mant.size() > 20 || expo.size() > 2) throw bad();
    unsigned __int128 v = 0;
    for (char c : mant) {
        v = v * 10 + static_cast<unsigned>(c - '0');
        if (v > UINT64_MAX) throw bad();
    }
    if (!expo.empty()) {
        int e = std::stoi(expo);
        for (int i = 0; i < e; ++i) {
            v *= 10;
            if (v > UINT64_MAX) throw bad();
        }
    }
    return static_cast<uint64_t>(v);
}

std::optional<TableId> parse_table_id(const std::string& name) {
    for (TableId id : {TableId::SCounts, TableId::SResidues, TableId::FCount, TableId::DCount,
                       TableId::PPartition, TableId::DpNotInD, TableId::DPlusOne})
        if (name == table_name(id)) return id;
    return std::nullopt;
}

std::optional<WitnessKind> parse_witness_kind(const std::string& name) {
    if (name == "not-in-d") return WitnessKind::NotInD;
    if (name == "in-d") return WitnessKind::InD;
    if (name == "germain") return WitnessKind::Germain;
    return std::nullopt;
}

std::optional<TableFormat> parse_format(const std::string& name) {
    if (name == "csv") return TableFormat::Csv;
    if (name == "tsv") return TableFormat::Tsv;
    if (name == "markdown") return TableFormat::Markdown;
    return std::nullopt;
}

std::optional<Precision> parse_precision(const std::string& name) {
    if (name == "paper") return Precision::Paper;
    if (name == "full") return Precision::Full;
    return std::nullopt;
}

std::string table_id_names() {
    std::string s;
    for (TableId id : {TableId::SCounts, TableId::SResidues, TableId::FCount, TableId::DCount,
                       TableId::PPartition, TableId::DpNotInD, TableId::DPlusOne}) {
        if (!s.empty()) s += ", ";
        s += table_name(id);
    }
    return s;
}

std::string witness_kind_names() { return "not-in-d, in-d, germain"; }

}  // namespace bernden
