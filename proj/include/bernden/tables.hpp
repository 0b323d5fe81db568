#ifndef BERNDEN_TABLES_HPP
#define BERNDEN_TABLES_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bernden {

enum class TableId {
    SCounts,     // class sizes + first/second elements
    SResidues,   // residue-class tallies per class
    FCount,      // least-subscript counting function
    DCount,      // denominator counting function
    PPartition,  // prime classes by cofactor d_p
    DpNotInD,    // primes whose cofactor is not a denominator
    DPlusOne,    // primality split of d+1 over denominators d
};

enum class TableFormat { Csv, Tsv, Markdown };
enum class Precision { Paper, Full };
enum class WitnessKind { NotInD, InD, Germain };

struct TableRequest {
    TableId id = TableId::SCounts;
    uint64_t limit = 100000;
    TableFormat format = TableFormat::Csv;
    Precision precision = Precision::Paper;
    std::vector<uint64_t> checkpoints;  // empty means {limit}
    uint64_t max_first = 112;           // s-counts / s-residues row selector
    std::vector<uint64_t> moduli = {8, 3, 5, 7, 11, 13};  // s-residues
    std::vector<uint64_t> targets = {6, 30, 42, 66};      // p-partition
    uint64_t segment_size = 0;  // 0 keeps the sieve default
    uint64_t workers = 1;
    std::string checkpoint_file;  // s-counts / s-residues / f-count resume
    bool show_tset = false;       // s-counts: include the T-set column
};

// Renders the requested table to `out` (data only; any progress notes go to
// `err`).  Returns 0.  Throws std::invalid_argument naming the offending
// flag, std::length_error / std::bad_alloc on resource exhaustion.
int run_table(const TableRequest& req, std::ostream& out, std::ostream& err);

// Witness searches; every row self-verifies before it is printed.
int run_witness(WitnessKind kind, uint64_t limit, TableFormat format, std::ostream& out);

// "250", "1e7", "25e2" -> value; rejects anything else (including overflow).
uint64_t parse_limit(const std::string& text);

std::optional<TableId> parse_table_id(const std::string& name);
std::optional<WitnessKind> parse_witness_kind(const std::string& name);
std::optional<TableFormat> parse_format(const std::string& name);
std::optional<Precision> parse_precision(const std::string& name);

// Spellings accepted by the parsers above, for error messages.
std::string table_id_names();
std::string witness_kind_names();

}  // namespace bernden

#endif
