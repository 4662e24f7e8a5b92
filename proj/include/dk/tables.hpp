#pragma once
// Table regeneration: evaluate every parameter row, apply the publication
// rounding rules, assemble the best-row partition and its all-reals
// extension, build the best-known comparison partition, and diff everything
// against the bundled transcription.

#include <string>
#include <vector>

#include "dk/methods.hpp"

namespace dk {

// ---------------------------------------------------------------- inputs

struct TableRowSpec {
  int table = 0;  // printed panel the row belongs to: 3, 4 or 5
  MethodParams params;
  std::string eps_str, eps1_str, a_str;  // original spellings for emission
};
std::vector<TableRowSpec> load_method_rows(const std::string& path);

// Transcribed prior bound alpha x^gamma (log x)^logpow on [x_lo, x_hi).
// alpha absent means only the validity range was transcribed; comparisons
// must then treat the segment boundaries as given, not re-derived.
struct LiteratureBound {
  std::string id;
  int k = 0;
  bool has_alpha = false;
  Encl alpha;
  Frac gamma;
  int logpow = 0;
  BigPoint x_lo;
  bool has_hi = false;
  BigPoint x_hi;
  bool in_partition = false;  // drives the best-known partition for its k
  // Transcribed point where the regenerated bounds overtake this prior
  // record, when that happens before the final regenerated threshold.
  bool has_record_until = false;
  BigPoint record_until;
};
std::vector<LiteratureBound> load_literature(const std::string& path);

// ---------------------------------------------------------- regeneration

struct RegeneratedRow {
  TableRowSpec spec;
  bool failed = false;  // engine error: row aborted, the rest proceed
  std::string error;
  RowResult result;         // valid when !failed
  std::string omega_print;  // ceiling at 4 decimals, scientific 5sf below 1e-4
  std::string x1_print;     // publication floor string
};
std::vector<RegeneratedRow> regenerate_rows(const std::vector<TableRowSpec>& specs,
                                            int workers, Prec p = 0);

// -------------------------------------------------------------- assembly

// One segment of the per-k best-row partition.  Segment boundaries are the
// published thresholds; a segment's winner is certified best throughout it.
struct Table6Row {
  int k = 0;
  size_t row = 0;  // winner, index into the regenerated vector
  BigPoint x_lo;
  bool open_ended = true;
  BigPoint x_hi;        // next threshold when !open_ended
  bool starred = false;  // a transcribed prior bound covers the whole segment
                         // and a later segment exists: excluded from the
                         // final piecewise theorem
};
std::vector<Table6Row> assemble_table6(const std::vector<RegeneratedRow>& rows,
                                       const std::vector<LiteratureBound>& lit,
                                       Prec p = 0);

// Non-starred segment promoted to all reals x >= threshold.  j numbers the
// surviving segments of a k so that the open-ended one is always j = 3.
struct Table1Row {
  int k = 0, j = 0;
  size_t row = 0;       // underlying parameter row
  BigPoint x;           // printed threshold (strict 4sf ceiling of x1 + 1/2)
  ExplicitBound bound;  // all-reals bound; alpha = bound.omega
  std::string alpha_print;  // ceiling at 3 decimals, scientific 4sf below 1e-4
  std::string x_print;
};
std::vector<Table1Row> assemble_table1(const std::vector<RegeneratedRow>& rows,
                                       const std::vector<Table6Row>& t6,
                                       Prec p = 0);

// Best-known partition: ours versus transcribed literature ranges.
struct ComparisonRow {
  int k = 0;
  std::string source;  // "ours" or a literature id
  std::string basis;   // "regenerated" or "transcribed"
  BigPoint x_lo;
  bool open_ended = true;
  BigPoint x_hi;
};
std::vector<ComparisonRow> compare_partition(const std::vector<Table1Row>& t1,
                                             const std::vector<LiteratureBound>& lit,
                                             Prec p = 0);

// ----------------------------------------------------------- print rules

std::string omega_print_str(const Encl& omega);
std::string alpha_print_str(const Encl& alpha);
// x1 + 1/2 rounded up to the next admissible threshold: integer ceiling
// below 1e6, else a strict 4-significant-figure ceiling with no dust guard
// (the half-unit shift must push 1.6000e98 up to 1.601e98).
std::string threshold_print_str(const BigPoint& x1, Prec p = 0);

// ------------------------------------------------------------- emission

struct TableBundle {
  std::vector<RegeneratedRow> rows;
  std::vector<Table6Row> t6;
  std::vector<Table1Row> t1;
  std::vector<ComparisonRow> t2;
};
TableBundle build_tables(const std::vector<TableRowSpec>& specs,
                         const std::vector<LiteratureBound>& lit, int workers,
                         Prec p = 0);

// format is "csv" or "jsonl".  Panels 3/4/5 use the schema
// k,method,eps,eps1,a,x0,omega,x1_mantissa,x1_exp10,gamma_num,gamma_den,
// beta_num,beta_den with decimal parameters kept as strings.  Failed rows
// are dropped from the panel and surface in the diff report.
std::string emit_params_panel(const TableBundle& b, int table,
                              const std::string& format);
std::string emit_table6(const TableBundle& b, const std::string& format);
std::string emit_table1(const TableBundle& b, const std::string& format);
std::string emit_table2(const TableBundle& b, const std::string& format);

// ---------------------------------------------------------- diff report

enum class DiffStatus { Match, WithinTol, OneSidedLow, Flag };
const char* diff_status_name(DiffStatus s);

struct DiffEntry {
  std::string panel;        // "table1" .. "table6"
  std::string key;          // row identity, e.g. "k=6 FourthLargeT eps=0.379"
  std::string field;        // "omega", "x1", "gamma", ...
  std::string printed;      // transcribed value
  std::string regenerated;  // our value
  DiffStatus status = DiffStatus::Match;
  std::string note;  // dominating constraint or misprint explanation
};

// Every value of every transcribed panel is matched to exactly one
// regenerated cell or flagged.  Unmatched reference rows and regenerated
// rows missing from the transcription both produce Flag entries.
std::vector<DiffEntry> diff_against_reference(const std::string& reference_path,
                                              const TableBundle& b, Prec p = 0);
std::string render_diff_report(const std::vector<DiffEntry>& entries);

}  // namespace dk
