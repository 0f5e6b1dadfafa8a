#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "covertor/gauge.hpp"
#include "covertor/notation.hpp"

namespace covertor::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// One knot-table row. The braid is the computing presentation; a PD code,
/// when present, is validated and carried along.
struct TableRow {
  int line = 0;
  std::string name;
  std::string braid;
  std::optional<std::string> pd;
  std::map<int, FroyshovInput> h_by_n;
  std::string notes;
  BraidWord word;
};

struct RowIssue {
  int line = 0;
  std::string message;
};

struct IngestResult {
  std::vector<TableRow> rows;
  std::vector<RowIssue> skipped;
};

/// RFC 4180 records with the physical line each one starts on. Quoted fields
/// may contain commas, doubled quotes and line breaks.
struct CsvRecord {
  int line = 0;
  std::vector<std::string> fields;
};
std::vector<CsvRecord> read_csv(std::istream& in);

/// "-1 (KM conventions)" -> value -1, provenance "KM conventions". Without a
/// parenthetical the fallback provenance is used.
FroyshovInput parse_h_cell(const std::string& cell, const std::string& fallback_provenance);

/// Requires a header with at least name and braid; optional columns pd,
/// h2..h5, h_provenance, notes. Malformed rows throw ParseError naming the
/// line, or are collected in `skipped` when lenient.
IngestResult ingest_csv(std::istream& in, bool lenient = false);

/// Invariants computed per knot. Ids are the JSON invariant names.
enum class Invariant {
  Det,
  Jprime,
  Mullins,
  LspaceJones,
  TlSum,
  Homology,
  LambdaFo,
  LambdaSw,
  Lefschetz,
  LN,
  LspaceLefschetz,
};

std::string invariant_id(Invariant inv);
/// Accepts the JSON id or the subcommand spelling (tl-sum or tl_sum).
Invariant parse_invariant(const std::string& text);
bool depends_on_n(Invariant inv);

/// One JSON record; n is null for n-independent invariants.
nlohmann::ordered_json compute_record(const std::string& name, const KnotPresentation& k, Invariant inv,
                                      std::optional<int> n, const std::optional<FroyshovInput>& h,
                                      const Rational& casson_base = 0);
/// Same shape with an "error" object in place of the value.
nlohmann::ordered_json error_record(const std::string& name, std::optional<int> n, const std::string& invariant,
                                    const std::string& code, const std::string& message);

struct BatchOptions {
  std::vector<Invariant> invariants{Invariant::Det, Invariant::TlSum, Invariant::Homology};
  std::vector<int> ns{2, 3, 4, 5};
  int jobs = 1;
  bool deterministic = false;
};

/// JSON lines in input order whatever the number of jobs. n-independent
/// invariants are emitted once per row. Returns the number of error records.
std::size_t run_batch(const std::vector<TableRow>& rows, const BatchOptions& opts, std::ostream& out);

/// Full command-line entry point. argv[0] is not included in args.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covertor::cli
