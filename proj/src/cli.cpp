#include "covertor/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "covertor/covers.hpp"
#include "covertor/error.hpp"
#include "covertor/jones.hpp"
#include "covertor/obstruct.hpp"
#include "covertor/seifert.hpp"

namespace covertor::cli {

using json = nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

json json_integer(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json base_record(const std::string& name, std::optional<int> n, const std::string& invariant) {
  json r;
  r["name"] = name;
  r["n"] = n ? json(*n) : json(nullptr);
  r["invariant"] = invariant;
  return r;
}

void set_value(json& r, const Rational& q) {
  r["num"] = json_integer(q.get_num());
  r["den"] = json_integer(q.get_den());
}

json froyshov_json(const std::optional<FroyshovInput>& h) {
  if (!h) return nullptr;
  json j;
  j["num"] = json_integer(h->value.get_num());
  j["den"] = json_integer(h->value.get_den());
  j["provenance"] = h->provenance;
  return j;
}

json rational_json(const Rational& q) { return to_string(q); }

std::string iso_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void finish_record(json& r, bool deterministic) {
  r["version"] = kToolVersion;
  if (!deterministic) r["timestamp"] = iso_timestamp();
}

GaugeInputs gauge_inputs(const KnotPresentation& k, std::optional<int> n, const std::optional<FroyshovInput>& h,
                         const Rational& casson_base) {
  GaugeInputs in{k, n.value_or(2), casson_base, h};
  return in;
}

int require_n(std::optional<int> n, Invariant inv) {
  if (!n) throw Error(ErrorCode::ValidationError, invariant_id(inv) + " needs a cover degree n");
  return *n;
}

}  // namespace

std::vector<CsvRecord> read_csv(std::istream& in) {
  std::vector<CsvRecord> records;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (text.rfind("\xEF\xBB\xBF", 0) == 0) text.erase(0, 3);

  CsvRecord current;
  std::string field;
  int line = 1;
  current.line = 1;
  bool quoted = false;
  bool field_was_quoted = false;
  auto end_field = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    const bool blank = current.fields.size() == 1 && current.fields[0].empty();
    if (!blank) records.push_back(std::move(current));
    current = CsvRecord{};
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"') {
      if (!field.empty() || field_was_quoted) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": stray quote inside unquoted field");
      }
      quoted = true;
      field_was_quoted = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      continue;
    } else if (c == '\n') {
      end_record();
      current.line = ++line;
    } else {
      field.push_back(c);
    }
  }
  if (quoted) throw Error(ErrorCode::ParseError, "line " + std::to_string(current.line) + ": unterminated quoted field");
  if (!field.empty() || !current.fields.empty()) end_record();
  return records;
}

FroyshovInput parse_h_cell(const std::string& cell, const std::string& fallback_provenance) {
  const std::string s = trim(cell);
  FroyshovInput h;
  const auto open = s.find('(');
  if (open == std::string::npos) {
    h.value = parse_rational(s);
    h.provenance = trim(fallback_provenance);
    return h;
  }
  if (s.back() != ')') throw Error(ErrorCode::ParseError, "unbalanced parenthesis in h value '" + s + "'");
  h.value = parse_rational(trim(s.substr(0, open)));
  h.provenance = trim(s.substr(open + 1, s.size() - open - 2));
  if (h.provenance.empty()) h.provenance = trim(fallback_provenance);
  return h;
}

IngestResult ingest_csv(std::istream& in, bool lenient) {
  const std::vector<CsvRecord> records = read_csv(in);
  IngestResult result;
  if (records.empty()) return result;

  std::map<std::string, std::size_t> column;
  const CsvRecord& header = records.front();
  for (std::size_t i = 0; i < header.fields.size(); ++i) {
    const std::string key = lower(trim(header.fields[i]));
    const bool known = key == "name" || key == "braid" || key == "pd" || key == "h_provenance" || key == "notes" ||
                       key == "h2" || key == "h3" || key == "h4" || key == "h5";
    if (!known) throw Error(ErrorCode::ParseError, "line " + std::to_string(header.line) + ": unknown column '" + key + "'");
    if (!column.emplace(key, i).second) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(header.line) + ": duplicate column '" + key + "'");
    }
  }
  if (!column.count("name") || !column.count("braid")) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(header.line) + ": header needs name and braid columns");
  }

  for (std::size_t r = 1; r < records.size(); ++r) {
    const CsvRecord& rec = records[r];
    try {
      if (rec.fields.size() != header.fields.size()) {
        throw Error(ErrorCode::ParseError, "expected " + std::to_string(header.fields.size()) + " fields, found " +
                                               std::to_string(rec.fields.size()));
      }
      auto cell = [&](const std::string& key) -> std::string {
        const auto it = column.find(key);
        return it == column.end() ? std::string() : trim(rec.fields[it->second]);
      };
      TableRow row;
      row.line = rec.line;
      row.name = cell("name");
      if (row.name.empty()) throw Error(ErrorCode::ParseError, "empty name");
      row.braid = cell("braid");
      row.word = parse_braid(row.braid);
      if (const std::string pd = cell("pd"); !pd.empty()) {
        parse_pd(pd);
        row.pd = pd;
      }
      const std::string provenance = cell("h_provenance");
      for (int n = 2; n <= 5; ++n) {
        const std::string h = cell("h" + std::to_string(n));
        if (!h.empty()) row.h_by_n.emplace(n, parse_h_cell(h, provenance));
      }
      row.notes = cell("notes");
      result.rows.push_back(std::move(row));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ParseError && e.code() != ErrorCode::ValidationError) throw;
      const std::string message = "line " + std::to_string(rec.line) + ": " + e.what();
      if (!lenient) throw Error(ErrorCode::ParseError, message);
      result.skipped.push_back({rec.line, message});
    }
  }
  return result;
}

std::string invariant_id(Invariant inv) {
  switch (inv) {
    case Invariant::Det: return "det";
    case Invariant::Jprime: return "jprime";
    case Invariant::Mullins: return "mullins";
    case Invariant::LspaceJones: return "lspace_jones";
    case Invariant::TlSum: return "tl_sum";
    case Invariant::Homology: return "homology";
    case Invariant::LambdaFo: return "lambda_fo";
    case Invariant::LambdaSw: return "lambda_sw";
    case Invariant::Lefschetz: return "lefschetz";
    case Invariant::LN: return "l_n";
    case Invariant::LspaceLefschetz: return "lspace_lefschetz";
  }
  return "det";
}

Invariant parse_invariant(const std::string& text) {
  std::string key = lower(trim(text));
  std::replace(key.begin(), key.end(), '-', '_');
  for (Invariant inv : {Invariant::Det, Invariant::Jprime, Invariant::Mullins, Invariant::LspaceJones, Invariant::TlSum,
                        Invariant::Homology, Invariant::LambdaFo, Invariant::LambdaSw, Invariant::Lefschetz,
                        Invariant::LN, Invariant::LspaceLefschetz}) {
    if (invariant_id(inv) == key) return inv;
  }
  throw Error(ErrorCode::ParseError, "unknown invariant '" + text + "'");
}

bool depends_on_n(Invariant inv) {
  switch (inv) {
    case Invariant::Det:
    case Invariant::Jprime:
    case Invariant::Mullins:
    case Invariant::LspaceJones: return false;
    default: return true;
  }
}

json compute_record(const std::string& name, const KnotPresentation& k, Invariant inv, std::optional<int> n,
                    const std::optional<FroyshovInput>& h, const Rational& casson_base) {
  if (!depends_on_n(inv)) n.reset();
  json r = base_record(name, n, invariant_id(inv));
  json cert;
  switch (inv) {
    case Invariant::Det: {
      const SeifertMatrix v = seifert_matrix(k.braid());
      set_value(r, Rational(knot_determinant(v)));
      cert["alexander"] = alexander(v).to_string();
      cert["genus"] = v.genus();
      break;
    }
    case Invariant::Jprime: {
      const JonesReport j = jones(k);
      set_value(r, Rational(j.jprime_at_minus_one));
      cert["jones"] = j.jones.to_string();
      cert["det"] = json_integer(j.det);
      break;
    }
    case Invariant::Mullins: {
      const JonesReport j = jones(k);
      const Rational lambda = casson_double_cover_mullins(k);
      set_value(r, lambda);
      cert["det"] = json_integer(j.det);
      cert["jprime"] = json_integer(j.jprime_at_minus_one);
      cert["signature"] = tl_signature(seifert_matrix(k.braid()), 1, 2).signature;
      break;
    }
    case Invariant::LspaceJones: {
      const Verdict v = jones_verdict(jones_certificate(k));
      r["verdict"] = to_string(v.kind);
      cert["det"] = json_integer(v.certificate.jones->det);
      cert["jprime"] = json_integer(v.certificate.jones->jprime);
      break;
    }
    case Invariant::TlSum: {
      const SignatureProfile p = signature_profile(seifert_matrix(k.braid()), require_n(n, inv));
      set_value(r, Rational(p.sum));
      json values;
      for (const auto& [m, s] : p.values) values[std::to_string(m)] = s;
      cert["signatures"] = values;
      break;
    }
    case Invariant::Homology: {
      const int degree = require_n(n, inv);
      const SeifertMatrix v = seifert_matrix(k.braid());
      const BranchedCoverReport c = branched_homology(v, degree);
      set_value(r, Rational(c.order));
      cert["group"] = c.homology.to_string();
      json factors = json::array();
      for (const Integer& f : c.homology.factors) factors.push_back(json_integer(f));
      cert["factors"] = factors;
      cert["free_rank"] = c.homology.free_rank;
      cert["qhs"] = c.qhs;
      cert["fox_order"] = json_integer(fox_order(v, degree));
      break;
    }
    case Invariant::LambdaFo:
    case Invariant::LambdaSw: {
      const GaugeInputs in = gauge_inputs(k, require_n(n, inv), std::nullopt, casson_base);
      const Rational fo = lambda_fo_mapping_torus(in);
      set_value(r, inv == Invariant::LambdaFo ? fo : Rational(-fo));
      cert["casson_base"] = rational_json(casson_base);
      const Rational sum = (fo - Rational(in.n) * casson_base) * 8;
      cert["signature_sum"] = json_integer(sum.get_num());
      break;
    }
    case Invariant::Lefschetz:
    case Invariant::LN: {
      const GaugeInputs in = gauge_inputs(k, require_n(n, inv), h, casson_base);
      const Rational lef = inv == Invariant::LN ? l_n_invariant(in) : monopole_lefschetz(in);
      set_value(r, lef);
      cert["lambda_fo"] = rational_json(lef + h->value);
      cert["froyshov"] = froyshov_json(h);
      cert["casson_base"] = rational_json(casson_base);
      cert["concordance_invariant"] = is_prime_power(in.n) && casson_base == 0;
      break;
    }
    case Invariant::LspaceLefschetz: {
      const Verdict v = lefschetz_verdict(gauge_inputs(k, require_n(n, inv), h, casson_base));
      r["verdict"] = to_string(v.kind);
      cert["lefschetz"] = rational_json(*v.certificate.lefschetz);
      cert["froyshov"] = froyshov_json(v.certificate.froyshov);
      cert["qhs"] = *v.certificate.qhs;
      cert["concordance_invariant"] = v.certificate.concordance_invariant;
      break;
    }
  }
  r["certificate"] = cert;
  return r;
}

json error_record(const std::string& name, std::optional<int> n, const std::string& invariant, const std::string& code,
                  const std::string& message) {
  json r = base_record(name, n, invariant);
  r["error"] = {{"code", code}, {"message", message}};
  return r;
}

std::size_t run_batch(const std::vector<TableRow>& rows, const BatchOptions& opts, std::ostream& out) {
  std::vector<std::string> buffers(rows.size());
  std::vector<std::size_t> error_counts(rows.size(), 0);

  auto work = [&](std::size_t i) {
    const TableRow& row = rows[i];
    const KnotPresentation k{row.word, row.name};
    std::string& buf = buffers[i];
    auto emit = [&](json r) {
      finish_record(r, opts.deterministic);
      buf += r.dump();
      buf += '\n';
    };
    for (Invariant inv : opts.invariants) {
      std::vector<std::optional<int>> degrees;
      if (depends_on_n(inv)) {
        for (int n : opts.ns) degrees.emplace_back(n);
      } else {
        degrees.emplace_back(std::nullopt);
      }
      for (const std::optional<int>& n : degrees) {
        std::optional<FroyshovInput> h;
        if (n) {
          if (const auto it = row.h_by_n.find(*n); it != row.h_by_n.end()) h = it->second;
        }
        try {
          emit(compute_record(row.name, k, inv, n, h));
        } catch (const Error& e) {
          ++error_counts[i];
          emit(error_record(row.name, n, invariant_id(inv), std::string(error_code_name(e.code())), e.what()));
        } catch (const std::exception& e) {
          ++error_counts[i];
          emit(error_record(row.name, n, invariant_id(inv), "InternalError", e.what()));
        }
      }
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(opts.jobs, rows.size()));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) work(i);
        release_thread_caches();
      });
    }
    for (std::thread& th : pool) th.join();
  }

  std::size_t errors = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << buffers[i];
    errors += error_counts[i];
  }
  out.flush();
  return errors;
}

namespace {

struct KnotOptions {
  std::string braid;
  std::string pd;
  std::string name;
};

void add_knot_options(CLI::App* sub, KnotOptions& ko) {
  auto* b = sub->add_option("--braid", ko.braid, "braid word, e.g. \"k=3;1 -2 1\"");
  auto* p = sub->add_option("--pd", ko.pd, "planar diagram code, e.g. \"X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)\"");
  b->excludes(p);
  p->excludes(b);
  sub->add_option("--name", ko.name, "label copied into JSON output");
}

KnotPresentation presentation_from(const KnotOptions& ko) {
  if (!ko.braid.empty()) return {parse_braid(ko.braid), ko.name.empty() ? std::nullopt : std::optional(ko.name)};
  if (!ko.pd.empty()) return {parse_pd(ko.pd), ko.name.empty() ? std::nullopt : std::optional(ko.name)};
  throw Error(ErrorCode::ParseError, "one of --braid or --pd is required");
}

std::optional<FroyshovInput> froyshov_from(const std::optional<std::string>& h, const std::string& provenance) {
  if (!h) return std::nullopt;
  return parse_h_cell(*h, provenance);
}

std::string verdict_text(const json& r) {
  std::ostringstream s;
  s << r["verdict"].get<std::string>() << " (";
  bool first = true;
  for (const auto& [key, value] : r["certificate"].items()) {
    if (!first) s << ", ";
    first = false;
    s << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
  }
  s << ")";
  return s.str();
}

std::string value_text(const json& r) {
  auto part = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  const std::string num = part(r["num"]);
  const std::string den = part(r["den"]);
  return den == "1" ? num : num + "/" + den;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knot invariants of cyclic branched covers and mapping tori", "covertor"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help and exit");
  app.set_version_flag("--version", kToolVersion);

  bool as_json = false;
  KnotOptions ko;
  int n = 2;
  int m = 1;
  std::string mode = "strict";
  std::optional<std::string> h;
  std::string h_provenance;
  std::string casson_base_text = "0";
  std::vector<int> triple;

  auto knot_command = [&](const std::string& cmd, const std::string& help, bool with_n, bool with_h) {
    CLI::App* sub = app.add_subcommand(cmd, help);
    add_knot_options(sub, ko);
    sub->add_flag("--json", as_json, "emit one JSON record");
    if (with_n) {
      sub->add_option("--n", n, "cover degree")->check(CLI::Range(2, 1 << 20));
      sub->add_option("--casson-base", casson_base_text, "lambda(Y) of the ambient homology sphere");
    }
    if (with_h) {
      sub->add_option("--h", h, "Froyshov invariant h(Sigma, s), e.g. \"-1 (KM conventions)\"");
      sub->add_option("--h-provenance", h_provenance, "source of the h value");
    }
    return sub;
  };

  CLI::App* c_jones = knot_command("jones", "Jones polynomial, det and J'(-1)", false, false);
  CLI::App* c_alex = knot_command("alexander", "symmetrized Alexander polynomial", false, false);
  CLI::App* c_det = knot_command("det", "knot determinant |Delta(-1)|", false, false);
  CLI::App* c_sig = knot_command("tl-sig", "Tristram-Levine signature at exp(2 pi i m/n)", true, false);
  c_sig->add_option("--m", m, "numerator of the root");
  c_sig->add_option("--mode", mode, "strict or averaged")->check(CLI::IsMember({"strict", "averaged"}));
  CLI::App* c_sum = knot_command("tl-sum", "sum of sign_{m/n} over 1 <= m < n", true, false);
  CLI::App* c_hom = knot_command("homology", "H_1 of the n-fold cyclic branched cover", true, false);
  CLI::App* c_fo = knot_command("lambda-fo", "Furuta-Ohta invariant of the mapping torus", true, false);
  CLI::App* c_sw = knot_command("lambda-sw", "Seiberg-Witten invariant of the mapping torus", true, false);
  CLI::App* c_lef = knot_command("lefschetz", "Lefschetz number on reduced monopole homology", true, true);
  CLI::App* c_ln = knot_command("l-n", "L_n concordance invariant for prime-power n", true, true);
  CLI::App* c_mul = knot_command("mullins", "Casson invariant of the double branched cover", false, false);
  CLI::App* c_lj = knot_command("lspace-jones", "det/J'(-1) obstruction for even covers", false, false);
  CLI::App* c_ll = knot_command("lspace-lefschetz", "Lefschetz obstruction for the n-fold cover", true, true);

  CLI::App* c_bri = app.add_subcommand("brieskorn", "Casson invariant of the Brieskorn sphere Sigma(n,q,r)");
  c_bri->add_option("exponents", triple, "n q r")->expected(3)->required();
  c_bri->add_flag("--json", as_json, "emit one JSON record");
  CLI::App* c_mil = app.add_subcommand("oracle-milnor", "Milnor-fiber lattice count for x^p + y^q + z^n");
  c_mil->add_option("exponents", triple, "p q n")->expected(3)->required();
  c_mil->add_flag("--json", as_json, "emit one JSON record");

  std::string input_path;
  std::string output_path;
  std::vector<std::string> invariant_names;
  BatchOptions batch;
  bool lenient = false;
  CLI::App* c_batch = app.add_subcommand("batch", "compute invariants for every row of a knot table");
  c_batch->add_option("input", input_path, "CSV file, - for standard input")->required();
  c_batch->add_option("-o,--output", output_path, "JSON-lines destination (default standard output)");
  c_batch->add_option("--invariants", invariant_names, "comma separated invariant ids")->delimiter(',');
  c_batch->add_option("--n", batch.ns, "comma separated cover degrees")->delimiter(',')->check(CLI::Range(2, 1 << 20));
  c_batch->add_option("--jobs", batch.jobs, "worker threads")->check(CLI::Range(1, 256));
  c_batch->add_flag("--deterministic", batch.deterministic, "omit timestamps");
  c_batch->add_flag("--lenient", lenient, "skip malformed rows instead of failing");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const std::string name = ko.name;
    auto print = [&](const json& r, const std::string& text) {
      if (as_json) {
        json copy = r;
        finish_record(copy, false);
        out << copy.dump() << "\n";
      } else {
        out << text << "\n";
      }
    };
    auto knot_record = [&](Invariant inv) {
      const KnotPresentation k = presentation_from(ko);
      const json r = compute_record(name, k, inv, n, froyshov_from(h, h_provenance), parse_rational(casson_base_text));
      print(r, r.contains("verdict") ? verdict_text(r) : value_text(r));
      return 0;
    };

    if (c_jones->parsed()) {
      const JonesReport j = jones(presentation_from(ko));
      json r = base_record(name, std::nullopt, "jones");
      r["polynomial"] = j.jones.to_string();
      json coeffs;
      for (const auto& [e, c] : j.jones.terms()) coeffs[std::to_string(e)] = json_integer(c);
      r["coefficients"] = coeffs;
      r["det"] = json_integer(j.det);
      r["jprime"] = json_integer(j.jprime_at_minus_one);
      print(r, "J(t) = " + j.jones.to_string() + "\ndet = " + to_string(j.det) +
                   "\nJ'(-1) = " + to_string(j.jprime_at_minus_one));
      return 0;
    }
    if (c_alex->parsed()) {
      const LaurentPoly d = alexander(seifert_matrix(presentation_from(ko).braid()));
      json r = base_record(name, std::nullopt, "alexander");
      r["polynomial"] = d.to_string();
      json coeffs;
      for (const auto& [e, c] : d.terms()) coeffs[std::to_string(e)] = json_integer(c);
      r["coefficients"] = coeffs;
      print(r, d.to_string());
      return 0;
    }
    if (c_sig->parsed()) {
      const SeifertMatrix v = seifert_matrix(presentation_from(ko).braid());
      const SignatureResult s =
          tl_signature(v, m, n, mode == "averaged" ? SignatureMode::Averaged : SignatureMode::Strict);
      json r = base_record(name, n, "tl_signature");
      r["m"] = m;
      r["num"] = s.signature;
      r["den"] = 1;
      r["certificate"] = {{"nullity", s.nullity}, {"precision_bits", s.precision_bits}, {"mode", mode}};
      std::string text = std::to_string(s.signature);
      if (s.nullity) text += " (nullity " + std::to_string(s.nullity) + ")";
      print(r, text);
      return 0;
    }
    if (c_det->parsed()) return knot_record(Invariant::Det);
    if (c_sum->parsed()) return knot_record(Invariant::TlSum);
    if (c_fo->parsed()) return knot_record(Invariant::LambdaFo);
    if (c_sw->parsed()) return knot_record(Invariant::LambdaSw);
    if (c_lef->parsed()) return knot_record(Invariant::Lefschetz);
    if (c_ln->parsed()) return knot_record(Invariant::LN);
    if (c_mul->parsed()) return knot_record(Invariant::Mullins);
    if (c_lj->parsed()) return knot_record(Invariant::LspaceJones);
    if (c_ll->parsed()) return knot_record(Invariant::LspaceLefschetz);
    if (c_hom->parsed()) {
      const KnotPresentation k = presentation_from(ko);
      const json r = compute_record(name, k, Invariant::Homology, n, std::nullopt);
      print(r, r["certificate"]["group"].get<std::string>());
      return 0;
    }
    if (c_bri->parsed()) {
      const Rational lambda = brieskorn_casson(triple[0], triple[1], triple[2]);
      json r = base_record(name, triple[0], "brieskorn_casson");
      set_value(r, lambda);
      r["certificate"] = {{"q", triple[1]}, {"r", triple[2]},
                          {"milnor_count", milnor_fiber_signature_oracle(triple[1], triple[2], triple[0])}};
      print(r, to_string(lambda));
      return 0;
    }
    if (c_mil->parsed()) {
      const long count = milnor_fiber_signature_oracle(triple[0], triple[1], triple[2]);
      json r = base_record(name, triple[2], "milnor_fiber_signature");
      r["num"] = count;
      r["den"] = 1;
      r["certificate"] = {{"p", triple[0]}, {"q", triple[1]}};
      print(r, std::to_string(count));
      return 0;
    }
    if (c_batch->parsed()) {
      if (!invariant_names.empty()) {
        batch.invariants.clear();
        for (const std::string& s : invariant_names) batch.invariants.push_back(parse_invariant(s));
      }
      IngestResult table;
      if (input_path == "-") {
        table = ingest_csv(std::cin, lenient);
      } else {
        std::ifstream file(input_path, std::ios::binary);
        if (!file) throw Error(ErrorCode::ParseError, "cannot open " + input_path);
        table = ingest_csv(file, lenient);
      }
      for (const RowIssue& issue : table.skipped) err << "skipped " << issue.message << "\n";
      std::size_t errors = 0;
      if (output_path.empty()) {
        errors = run_batch(table.rows, batch, out);
      } else {
        std::ofstream file(output_path, std::ios::binary | std::ios::trunc);
        if (!file) throw Error(ErrorCode::ParseError, "cannot write " + output_path);
        errors = run_batch(table.rows, batch, file);
      }
      err << table.rows.size() << " rows, " << errors << " error records\n";
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_status(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace covertor::cli
