#include "artinsum/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "artinsum/decompose.hpp"
#include "artinsum/error.hpp"
#include "artinsum/graded.hpp"
#include "artinsum/parser.hpp"
#include "artinsum/resolution.hpp"
#include "artinsum/sums.hpp"

namespace artinsum::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr int kSchema = 1;

class IoError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int size = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &size, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < size; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

struct Input {
  std::string path;
  std::string text;
  ArtinAlgebra algebra;
};

Input load(const std::string& path) {
  Input in{path, read_file(path), {}};
  in.algebra = ArtinAlgebra::parse(in.text);
  return in;
}

Json input_json(const std::string& path, const std::string& text) {
  return Json{{"path", path}, {"sha256", sha256_hex(text)}};
}

Json sizes(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (std::size_t x : v) a.push_back(x);
  return a;
}

Json strings(const std::vector<Polynomial>& v) {
  Json a = Json::array();
  for (const auto& p : v) a.push_back(p.to_string());
  return a;
}

/// Greedily drops basis elements that lie in the ideal of the others.
std::vector<Polynomial> irredundant_generators(const IdealPresentation& ideal) {
  std::vector<Polynomial> gens = ideal.groebner_basis();
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<Polynomial> others = gens;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
    if (IdealPresentation(ideal.ring(), others).contains(gens[i])) gens = std::move(others);
  }
  return gens;
}

Json presentation_json(const IdealPresentation& ideal) {
  Json vars = Json::array();
  for (const auto& name : ideal.ring()->names) vars.push_back(name);
  return Json{{"field", ideal.field().to_string()},
              {"vars", vars},
              {"groebner_basis", strings(ideal.groebner_basis())},
              {"generators", strings(irredundant_generators(ideal))}};
}

Json invariants_json(const ArtinAlgebra& a) {
  return Json{{"length", length(a)},
              {"embedding_dimension", embedding_dimension(a)},
              {"loewy_length", loewy_length(a)},
              {"type", type(a)},
              {"hilbert_function", sizes(hilbert_function(a))},
              {"gorenstein", is_gorenstein(a)}};
}

Json component_json(const ArtinAlgebra& a) {
  Json j = presentation_json(a.presentation());
  j["length"] = length(a);
  j["embedding_dimension"] = embedding_dimension(a);
  j["loewy_length"] = loewy_length(a);
  return j;
}

Json header(const std::string& command) { return Json{{"schema", kSchema}, {"command", command}}; }

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const IoError*>(&e)) return "io";
  if (dynamic_cast<const UsageError*>(&e)) return "usage";
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const NotZeroDimensionalError*>(&e)) return "not-zero-dimensional";
  if (dynamic_cast<const UnitIdealError*>(&e)) return "unit-ideal";
  if (dynamic_cast<const NotLocalError*>(&e)) return "not-local";
  if (dynamic_cast<const NotGorensteinError*>(&e)) return "not-gorenstein";
  if (dynamic_cast<const BadSocleError*>(&e)) return "bad-socle";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
  if (dynamic_cast<const MismatchError*>(&e)) return "mismatch";
  if (dynamic_cast<const ResourceError*>(&e)) return "resource";
  return "internal";
}

Json error_json(const std::string& command, const std::exception& e) {
  Json j = header(command);
  j["error"] = Json{{"kind", error_kind(e)}, {"message", e.what()}};
  j["exit_code"] = exit_code(e);
  return j;
}

// ---------------------------------------------------------------- tables

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void print_table(const Json& j, std::ostream& out, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      print_table(value, out, indent + 2);
    } else if (value.is_array()) {
      bool flat = std::all_of(value.begin(), value.end(), [](const Json& x) { return x.is_primitive(); });
      if (flat) {
        bool numbers = std::all_of(value.begin(), value.end(), [](const Json& x) { return x.is_number(); });
        bool wordy = std::any_of(value.begin(), value.end(), [](const Json& x) {
          return x.is_string() && x.get<std::string>().find_first_of(", ") != std::string::npos;
        });
        if (value.empty()) {
          out << pad << key << ": -\n";
        } else if (wordy) {
          out << pad << key << ":\n";
          for (const auto& x : value) out << pad << "  - " << scalar_text(x) << "\n";
        } else {
          std::string line;
          for (const auto& x : value) line += (line.empty() ? "" : ", ") + scalar_text(x);
          out << pad << key << ": " << (numbers ? "(" + line + ")" : line) << "\n";
        }
      } else {
        out << pad << key << ":\n";
        for (const auto& x : value) {
          out << pad << "  -\n";
          print_table(x, out, indent + 4);
        }
      }
    } else {
      out << pad << key << ": " << scalar_text(value) << "\n";
    }
  }
}

// ---------------------------------------------------------------- commands

Json analyze(const std::string& path) {
  Input in = load(path);
  const ArtinAlgebra& a = in.algebra;
  Json j = header("analyze");
  j["input"] = input_json(path, in.text);
  j["presentation"] = presentation_json(a.presentation());
  j["invariants"] = invariants_json(a);
  GradedAlgebra g = associated_graded(a);
  Json graded;
  graded["presentation"] = presentation_json(g.presentation());
  graded["hilbert_function"] = sizes(g.hilbert_function());
  graded["gls"] = g.top_degree() >= 2 ? Json(is_gls(g).holds) : Json(nullptr);
  Classification c = classify(hilbert_function(a));
  graded["short"] = c.is_short;
  graded["stretched"] = c.stretched;
  graded["compressed"] = c.compressed;
  j["graded"] = graded;
  if (is_gorenstein(a) && length(a) > 1) {
    IarrobinoResult r = iarrobino(a);
    j["iarrobino"] = Json{{"q0_hilbert_function", sizes(r.q0.hilbert_function())},
                          {"q0_type", type(r.q0.algebra())}};
  }
  j["status"] = "ok";
  return j;
}

std::optional<Polynomial> socle_expression(const ArtinAlgebra& a, const std::string& text) {
  if (text.empty()) return std::nullopt;
  const RingPtr& ring = a.source_presentation().ring() ? a.source_presentation().ring() : a.ring();
  try {
    return parse_polynomial(ring, text);
  } catch (const ParseError& e) {
    throw BadSocleError(std::string("cannot parse socle element: ") + e.what());
  }
}

struct ConnectOptions {
  std::string unit;
  std::string socle_r;
  std::string socle_s;
  std::size_t verify_series = 0;
  std::string output;
};

Json connect(const std::string& path_r, const std::string& path_s, const ConnectOptions& opts) {
  Input r = load(path_r);
  Input s = load(path_s);
  ConnectedSumSpec spec{r.algebra, s.algebra, socle_expression(r.algebra, opts.socle_r),
                        socle_expression(s.algebra, opts.socle_s), std::nullopt};
  if (!opts.unit.empty()) spec.unit = Scalar(r.algebra.field(), Rational::parse(opts.unit));
  SumResult q = connected_sum(spec);
  Json j = header("connect");
  j["inputs"] = Json::array({input_json(path_r, r.text), input_json(path_s, s.text)});
  j["options"] = Json{{"unit", opts.unit.empty() ? "1" : opts.unit},
                      {"socle_r", opts.socle_r.empty() ? Json(nullptr) : Json(opts.socle_r)},
                      {"socle_s", opts.socle_s.empty() ? Json(nullptr) : Json(opts.socle_s)}};
  j["trivial"] = q.trivial;
  j["presentation"] = presentation_json(q.algebra.presentation());
  j["invariants"] = invariants_json(q.algebra);
  Json checks;
  if (!q.trivial) {
    checks["length_identity"] = length(q.algebra) + 2 == length(r.algebra) + length(s.algebra);
    checks["edim_additivity"] =
        embedding_dimension(q.algebra) == embedding_dimension(r.algebra) + embedding_dimension(s.algebra);
    checks["h2_bound"] = h2_bound_check(r.algebra, s.algebra, q.algebra);
  }
  checks["gorenstein"] = is_gorenstein(q.algebra);
  if (opts.verify_series > 0 && !q.trivial) {
    SeriesCheck c = verify_cs_series(r.algebra, s.algebra, q.algebra, opts.verify_series);
    checks["series"] = Json{{"truncation", opts.verify_series},
                            {"inverse_poincare", c.lhs.to_string()},
                            {"phi", c.phi.to_string()},
                            {"holds", c.holds}};
  }
  j["checks"] = checks;
  if (!opts.output.empty()) write_file(opts.output, q.algebra.presentation().to_string());
  j["status"] = "ok";
  return j;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Json coordinate_change_json(const CoordinateChange& c) {
  Json old_vars = Json::array(), new_vars = Json::array(), forward = Json::array(), inverse = Json::array();
  for (const auto& n : c.old_ring->names) old_vars.push_back(n);
  for (std::size_t i = 0; i < c.new_ring->nvars(); ++i) {
    new_vars.push_back(c.new_ring->names[i]);
    forward.push_back(c.new_ring->names[i] + " = " + c.forward[i].to_string());
  }
  for (std::size_t i = 0; i < c.old_ring->nvars(); ++i) {
    inverse.push_back(c.old_ring->names[i] + " = " + c.inverse[i].to_string());
  }
  return Json{{"old_vars", old_vars},
              {"new_vars", new_vars},
              {"forward", forward},
              {"inverse", inverse},
              {"rewritten", presentation_json(c.rewritten)}};
}

Json certificates_json(const std::vector<Certificate>& certs) {
  Json a = Json::array();
  for (const auto& c : certs) a.push_back(Json{{"kind", to_string(c.kind)}, {"detail", c.detail}});
  return a;
}

Json report_json(const DecompositionReport& d) {
  Json j;
  j["status"] = to_string(d.status);
  j["trivial"] = d.trivial;
  if (d.r && d.s) {
    j["components"] = Json{{"r", component_json(*d.r)},
                           {"s", component_json(*d.s)},
                           {"unit", d.unit ? d.unit->to_string() : "1"}};
  }
  if (d.change) j["coordinate_change"] = coordinate_change_json(*d.change);
  j["certificates"] = certificates_json(d.certificates);
  Json verified = Json::array(), failures = Json::array();
  for (const auto& v : d.verified) verified.push_back(v);
  for (const auto& f : d.failures) failures.push_back(f);
  j["verified"] = verified;
  j["failures"] = failures;
  return j;
}

Json decompose(const std::string& path, const std::string& partition, bool structure) {
  Input in = load(path);
  const ArtinAlgebra& q = in.algebra;
  if (!is_gorenstein(q)) throw NotGorensteinError("decomposition needs a Gorenstein algebra");
  Json j = header("decompose");
  j["input"] = input_json(path, in.text);
  j["presentation"] = presentation_json(q.presentation());
  j["invariants"] = invariants_json(q);
  if (!partition.empty()) {
    auto bar = partition.find('|');
    if (bar == std::string::npos) throw UsageError("partition must look like \"Y1,Y2|Z1\"");
    SplitCheck c = check_split(q, split_names(partition.substr(0, bar)), split_names(partition.substr(bar + 1)));
    j["mode"] = "partition";
    j["status"] = c.ok ? "decomposed" : "not-split";
    Json offending = Json::array(), reasons = Json::array();
    for (const auto& o : c.offending) offending.push_back(o);
    for (const auto& r : c.reasons) reasons.push_back(r);
    j["offending"] = offending;
    j["reasons"] = reasons;
    if (c.ok) {
      j["components"] = Json{{"r", component_json(*c.r)}, {"s", component_json(*c.s)}, {"unit", c.unit->to_string()}};
    } else {
      Json contractions;
      if (c.r) contractions["r"] = component_json(*c.r);
      if (c.s) contractions["s"] = component_json(*c.s);
      j["contractions"] = contractions;
    }
    return j;
  }
  if (structure) {
    j["mode"] = "structure";
    j.update(report_json(structure_decompose(q)));
    return j;
  }
  j["mode"] = "auto";
  std::vector<Certificate> certs = certify_indecomposable(q);
  if (!certs.empty() || q.loewy_length() < 3) {
    DecompositionReport d;
    d.certificates = certs;
    d.status = certs.empty() ? DecompositionStatus::INCONCLUSIVE : DecompositionStatus::INDECOMPOSABLE_CERTIFIED;
    j.update(report_json(d));
    return j;
  }
  j.update(report_json(structure_decompose(q)));
  return j;
}

struct ApolarOptions {
  std::string poly;
  std::string dual_vars;
  std::string names;
  std::string field = "QQ";
  std::string output;
};

Field parse_field(const std::string& text) {
  Presentation p = parse_presentation("field " + text + "; vars; ideal;");
  return p.ring->field;
}

Json apolar(const ApolarOptions& opts) {
  std::vector<std::string> duals = split_names(opts.dual_vars);
  if (duals.empty()) {
    static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
    std::set<std::string> seen;
    for (auto it = std::sregex_iterator(opts.poly.begin(), opts.poly.end(), ident); it != std::sregex_iterator(); ++it) {
      if (seen.insert(it->str()).second) duals.push_back(it->str());
    }
  }
  RingPtr dual = make_ring(parse_field(opts.field), duals);
  Polynomial f = parse_polynomial(dual, opts.poly);
  ArtinAlgebra a = apolar_algebra(f, split_names(opts.names));
  Json j = header("apolar");
  j["input"] = Json{{"poly", f.to_string()}, {"dual_vars", duals}, {"sha256", sha256_hex(opts.poly)}};
  j["presentation"] = presentation_json(a.presentation());
  j["invariants"] = invariants_json(a);
  if (!opts.output.empty()) write_file(opts.output, a.presentation().to_string());
  j["status"] = "ok";
  return j;
}

Json betti(const std::string& path, std::size_t n) {
  Input in = load(path);
  BettiData b = betti_numbers(in.algebra, n);
  Json j = header("betti");
  j["input"] = input_json(path, in.text);
  j["truncation"] = n;
  j["betti"] = sizes(b.betti);
  j["inverse_poincare"] = b.poincare().reciprocal().to_string();
  j["epsilon1"] = b.epsilon1;
  j["epsilon2"] = b.epsilon2;
  j["minimal"] = b.minimal;
  j["exact_through"] = b.exact_through;
  j["status"] = "ok";
  return j;
}

Json fibre(const std::string& path_r, const std::string& path_s, const std::string& output) {
  Input r = load(path_r);
  Input s = load(path_s);
  SumResult p = fibre_product(r.algebra, s.algebra);
  Json j = header("fibre");
  j["inputs"] = Json::array({input_json(path_r, r.text), input_json(path_s, s.text)});
  j["trivial"] = p.trivial;
  j["presentation"] = presentation_json(p.algebra.presentation());
  j["invariants"] = invariants_json(p.algebra);
  if (!output.empty()) write_file(output, p.algebra.presentation().to_string());
  j["status"] = "ok";
  return j;
}

/// Analyzes every regular file under `dir` (sorted by name) on `jobs` threads.
std::pair<Json, int> analyze_directory(const std::string& dir, std::size_t jobs) {
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  std::vector<Json> results(files.size());
  std::vector<int> codes(files.size(), OK);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        results[i] = analyze(files[i]);
      } catch (const std::exception& e) {
        results[i] = error_json("analyze", e);
        codes[i] = exit_code(e);
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::max<std::size_t>(1, jobs); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  Json j = header("analyze");
  j["directory"] = dir;
  j["results"] = results;
  return {j, codes.empty() ? OK : *std::max_element(codes.begin(), codes.end())};
}

/// Applies ARTINSUM_MAX_DEGREE for the lifetime of one command.
class DegreeOverride {
 public:
  DegreeOverride() : saved_(default_max_degree()) {}
  ~DegreeOverride() { set_default_max_degree(saved_); }
  DegreeOverride(const DegreeOverride&) = delete;
  DegreeOverride& operator=(const DegreeOverride&) = delete;

 private:
  unsigned saved_;
};

void apply_degree_override() {
  const char* env = std::getenv("ARTINSUM_MAX_DEGREE");
  if (!env || !*env) return;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0 || v > 255) throw UsageError("ARTINSUM_MAX_DEGREE must be an integer in 1..255");
  set_default_max_degree(static_cast<unsigned>(v));
}

}  // namespace

int exit_code(const std::exception& e) {
  if (dynamic_cast<const IoError*>(&e)) return IO;
  if (dynamic_cast<const UsageError*>(&e)) return USAGE;
  if (dynamic_cast<const ParseError*>(&e)) return PARSE;
  if (dynamic_cast<const NotZeroDimensionalError*>(&e) || dynamic_cast<const UnitIdealError*>(&e) ||
      dynamic_cast<const NotLocalError*>(&e)) {
    return NOT_ARTINIAN;
  }
  if (dynamic_cast<const NotGorensteinError*>(&e)) return NOT_GORENSTEIN;
  if (dynamic_cast<const BadSocleError*>(&e)) return BAD_SOCLE;
  if (dynamic_cast<const PreconditionError*>(&e) || dynamic_cast<const MismatchError*>(&e)) return PRECONDITION;
  if (dynamic_cast<const ResourceError*>(&e)) return RESOURCE;
  if (dynamic_cast<const std::bad_alloc*>(&e)) return RESOURCE;
  return INTERNAL;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connected sums and fibre products of Artinian Gorenstein algebras", "artinsum"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print the report as JSON");

  std::string path, path_r, path_s, output, partition;
  std::size_t jobs = 1, max_n = 6;
  bool structure = false;
  ConnectOptions connect_opts;
  ApolarOptions apolar_opts;

  auto* c_analyze = app.add_subcommand("analyze", "Invariants, associated graded ring and classification");
  c_analyze->add_option("path", path, "Presentation file or directory of files")->required();
  c_analyze->add_option("--jobs", jobs, "Worker threads for a directory")->check(CLI::PositiveNumber);

  auto* c_connect = app.add_subcommand("connect", "Connected sum R # S");
  c_connect->add_option("r", path_r, "Presentation of R")->required();
  c_connect->add_option("s", path_s, "Presentation of S")->required();
  c_connect->add_option("--unit", connect_opts.unit, "Unit u in the relation soc R - u soc S");
  c_connect->add_option("--socle-r", connect_opts.socle_r, "Socle generator of R");
  c_connect->add_option("--socle-s", connect_opts.socle_s, "Socle generator of S");
  c_connect->add_option("--verify-series", connect_opts.verify_series, "Check the Poincaré series to this order");
  c_connect->add_option("--output", connect_opts.output, "Write the presentation of the sum here");

  auto* c_decompose = app.add_subcommand("decompose", "Split a Gorenstein algebra as a connected sum");
  c_decompose->add_option("path", path, "Presentation file")->required();
  c_decompose->add_option("--partition", partition, "Variable partition such as \"Y1,Y2|Z\"");
  c_decompose->add_flag("--structure", structure, "Use the associated graded ring route only");

  auto* c_apolar = app.add_subcommand("apolar", "Apolar algebra of a dual polynomial");
  c_apolar->add_option("--poly", apolar_opts.poly, "Dual polynomial")->required();
  c_apolar->add_option("--dual-vars", apolar_opts.dual_vars, "Variables of the dual polynomial");
  c_apolar->add_option("--names", apolar_opts.names, "Variables of the apolar algebra (default X1..Xn)");
  c_apolar->add_option("--field", apolar_opts.field, "QQ or GF(p)");
  c_apolar->add_option("--output", apolar_opts.output, "Write the presentation here");

  auto* c_betti = app.add_subcommand("betti", "Betti numbers of the residue field");
  c_betti->add_option("path", path, "Presentation file")->required();
  c_betti->add_option("--max", max_n, "Homological degree to resolve to")->check(CLI::Range(2, 64));

  auto* c_fibre = app.add_subcommand("fibre", "Fibre product R x_k S");
  c_fibre->add_option("r", path_r, "Presentation of R")->required();
  c_fibre->add_option("s", path_s, "Presentation of S")->required();
  c_fibre->add_option("--output", output, "Write the presentation of the product here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return OK;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return USAGE;
  }
  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();

  auto emit = [&](const Json& report) {
    if (json) {
      out << report.dump(2) << "\n";
    } else {
      print_table(report, out);
    }
  };

  DegreeOverride restore;
  try {
    apply_degree_override();
    if (chosen == c_analyze) {
      if (fs::is_directory(path)) {
        auto [report, code] = analyze_directory(path, jobs);
        emit(report);
        return code;
      }
      emit(analyze(path));
    } else if (chosen == c_connect) {
      emit(connect(path_r, path_s, connect_opts));
    } else if (chosen == c_decompose) {
      emit(decompose(path, partition, structure));
    } else if (chosen == c_apolar) {
      emit(apolar(apolar_opts));
    } else if (chosen == c_betti) {
      emit(betti(path, max_n));
    } else if (chosen == c_fibre) {
      emit(fibre(path_r, path_s, output));
    }
    return OK;
  } catch (const std::exception& e) {
    int code = exit_code(e);
    err << "error: " << e.what() << "\n";
    if (json) out << error_json(command, e).dump(2) << "\n";
    return code;
  }
}

}  // namespace artinsum::cli
