// Command-line front end: root-system queries, Euler characters, cohomology
// verdicts, batch scans, and the acceptance self-test.
#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "superweyl/json_io.hpp"
#include "superweyl/selftest.hpp"

namespace sw = superweyl;
using sw::json;

namespace {

constexpr int kMaxRank = 12;
constexpr long long kDefaultMaxRows = 1000000;

sw::Superdim make_dim(int m, int n) {
  sw::check_input(m >= 1 && n >= 1, "both block sizes must be at least 1");
  sw::check_input(m + n <= kMaxRank, "m + n must be at most 12");
  return sw::Superdim(m, n);
}

sw::Perm parse_perm(const std::string& s, int k) {
  std::optional<sw::Perm> p = sw::Perm::parse(s);
  if (!p) sw::fail_input("could not parse permutation '" + s + "'");
  if (static_cast<int>(p->size()) != k)
    sw::fail_input("permutation '" + s + "' does not have " +
                   std::to_string(k) + " entries");
  return *p;
}

sw::Weight parse_lambda(const std::string& s, int k) {
  std::vector<long long> coords;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos
                                        ? std::string::npos
                                        : comma - pos);
    try {
      std::size_t used = 0;
      coords.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      sw::fail_input("could not parse weight coordinate '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(coords.size()) != k)
    sw::fail_input("weight must have exactly " + std::to_string(k) +
                   " coordinates, got " + std::to_string(coords.size()));
  return sw::Weight::integral(std::move(coords));
}

// A coordinate box: comma-separated "lo:hi" ranges (or single values), one
// per weight coordinate.
struct Box {
  std::vector<std::pair<long long, long long>> ranges;

  long long count() const {
    long long total = 1;
    for (const auto& [lo, hi] : ranges) {
      long long width = hi - lo + 1;
      sw::check_input(total <= (kDefaultMaxRows * 1000) / width + 1,
                      "box is astronomically large");
      total *= width;
    }
    return total;
  }
};

Box parse_box(const std::string& s, int k) {
  Box box;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos
                                        ? std::string::npos
                                        : comma - pos);
    std::size_t colon = tok.find(':');
    try {
      long long lo, hi;
      std::size_t used = 0;
      if (colon == std::string::npos) {
        lo = hi = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } else {
        lo = std::stoll(tok.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument(tok);
        std::string rest = tok.substr(colon + 1);
        hi = std::stoll(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(tok);
      }
      sw::check_input(lo <= hi, "box range '" + tok + "' is empty");
      box.ranges.emplace_back(lo, hi);
    } catch (const std::invalid_argument&) {
      sw::fail_input("could not parse box range '" + tok +
                     "' (expected lo:hi or a single integer)");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(box.ranges.size()) != k)
    sw::fail_input("box must have exactly " + std::to_string(k) +
                   " ranges, got " + std::to_string(box.ranges.size()));
  return box;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join_ll(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string perm_str(const sw::Perm& w) { return w.one_line(); }

std::string weight_str(const sw::Weight& lam) {
  std::vector<long long> c;
  for (std::size_t i = 0; i < lam.dim(); ++i) c.push_back(lam.integer_coord(i));
  return join_ll(c);
}

// Strongest applicable verdict: chamber presentation first, then the
// typical vanishing theorem, then the lattice thresholds.
sw::Verdict decide(const sw::Weight& lam, int parity,
                   const sw::RootSystem& sys, const sw::Characteristic& ch) {
  sw::Verdict v = sw::bbw_verdict(lam, parity, sys, ch);
  if (v.tag != sw::VerdictTag::Undetermined) return v;
  sw::Verdict kt = sw::kempf_typical_verdict(lam, sys, ch);
  if (kt.tag != sw::VerdictTag::Undetermined) return kt;
  if (sw::decompose(sys.w, sys.dim).w0.is_identity()) {
    sw::Verdict kf = sw::kempf_verdict(lam, sys);
    if (kf.tag != sw::VerdictTag::Undetermined) return kf;
  }
  return v;
}

// Scan label for the closing conjecture: "1" when every threshold pairing
// reaches min(m, n), "0" otherwise, empty for Borels without thresholds.
std::string conj_min_mn(const sw::Weight& lam, const sw::RootSystem& sys) {
  if (!sw::decompose(sys.w, sys.dim).w0.is_identity()) return "";
  long long bound = std::min(sys.dim.m, sys.dim.n);
  for (int i = 1; i < sys.total(); ++i) {
    if (i == sys.dim.m) continue;
    if (sw::pair_coroot_int(lam, sw::Root(i - 1, i)) < bound) return "0";
  }
  return "1";
}

struct RootsArgs {
  int m = 0, n = 0;
  std::string w;
};

struct PointArgs {
  int m = 0, n = 0;
  std::string w;
  std::string lambda;
  int parity = 0;
  long long p = 0;
};

struct ScanArgs {
  int m = 0, n = 0;
  std::vector<std::string> words;
  std::vector<long long> chars;
  std::string box;
  std::string out = "csv";
  bool verify = false;
  long long max_rows = kDefaultMaxRows;
};

void run_roots(const RootsArgs& a) {
  sw::Superdim d = make_dim(a.m, a.n);
  sw::RootSystem sys = sw::root_system(d, parse_perm(a.w, d.total()));
  json j = sw::root_system_to_json(sys);
  sw::Decomposition dec = sw::decompose(sys.w, d);
  j["w0"] = dec.w0.one_line();
  j["w1"] = dec.w1.one_line();
  std::cout << j.dump(2) << "\n";
}

void run_chi(const PointArgs& a) {
  sw::Superdim d = make_dim(a.m, a.n);
  sw::RootSystem sys = sw::root_system(d, parse_perm(a.w, d.total()));
  sw::Weight lam = parse_lambda(a.lambda, d.total());
  sw::EulerCharacter ec = sw::chi_character(lam, sys, a.parity);
  json j;
  j["m"] = d.m;
  j["n"] = d.n;
  j["w"] = sys.w.one_line();
  j["lambda"] = sw::weight_to_json(lam);
  j["parity"] = ec.parity;
  j["chi"] = sw::poly_to_json(ec.poly);
  j["term_count"] = ec.poly.terms().size();
  j["euler_dimension"] = sw::evaluate_dimension(ec.poly).str();
  j["verify_clearing"] = sw::verify_clearing(ec);
  std::cout << j.dump(2) << "\n";
}

void run_verdict(const PointArgs& a) {
  sw::Superdim d = make_dim(a.m, a.n);
  sw::RootSystem sys = sw::root_system(d, parse_perm(a.w, d.total()));
  sw::Weight lam = parse_lambda(a.lambda, d.total());
  sw::Characteristic ch(a.p);

  json j;
  j["query"] = {{"m", d.m},
                {"n", d.n},
                {"w", sys.w.one_line()},
                {"lambda", sw::weight_to_json(lam)},
                {"parity", a.parity},
                {"char", a.p}};
  j["typical"] = sw::is_typical(lam, sys, ch);
  j["chamber"] = sw::chamber_name(sw::chamber(lam, sys, ch));
  j["verdict"] = sw::verdict_to_json(decide(lam, a.parity, sys, ch));
  j["bbw"] = sw::verdict_to_json(sw::bbw_verdict(lam, a.parity, sys, ch));
  j["kempf_typical"] =
      sw::verdict_to_json(sw::kempf_typical_verdict(lam, sys, ch));
  if (sw::decompose(sys.w, sys.dim).w0.is_identity())
    j["kempf"] = sw::verdict_to_json(sw::kempf_verdict(lam, sys));

  if (d.m == 2 && d.n == 1) {
    std::string one = sys.w.one_line();
    if (one == "1,3,2")
      j["gl21"] = sw::gl21_to_json(sw::classify_23(lam, a.parity, ch));
    else if (one == "3,1,2")
      j["gl21"] = sw::gl21_to_json(sw::classify_132(lam, a.parity, ch));
  }
  if (d.m == 1 && d.n == 1) {
    sw::Gl11Side side = sys.w.is_identity() ? sw::Gl11Side::Minus
                                            : sw::Gl11Side::Plus;
    j["gl11"] = sw::gl11_to_json(sw::gl11_h0_structure(lam, a.parity, side, ch));
  }
  std::cout << j.dump(2) << "\n";
}

void run_scan(const ScanArgs& a) {
  sw::Superdim d = make_dim(a.m, a.n);
  int k = d.total();

  std::vector<sw::RootSystem> systems;
  for (const std::string& ws : a.words)
    systems.push_back(sw::root_system(d, parse_perm(ws, k)));
  sw::check_input(!systems.empty(), "scan needs at least one -w system");

  std::vector<sw::Characteristic> chars;
  for (long long p : a.chars) chars.emplace_back(p);
  if (chars.empty()) chars.emplace_back(0);

  Box box = parse_box(a.box, k);
  long long rows = box.count() * static_cast<long long>(systems.size()) *
                   static_cast<long long>(chars.size());
  if (rows > a.max_rows)
    sw::fail_input("scan refused: estimated " + std::to_string(rows) +
                   " rows exceeds the limit of " + std::to_string(a.max_rows) +
                   " (narrow the box or raise --max-rows)");

  bool csv = a.out == "csv";
  long long verify_failures = 0;
  json rows_json = json::array();
  if (csv) {
    std::cout << "m,n,w,p,lambda,chamber,typical,verdict,degree,provenance,"
                 "reason,conj_min_mn";
    if (a.verify) std::cout << ",verify";
    std::cout << "\n";
  }

  std::vector<long long> cur(static_cast<std::size_t>(k));
  for (const sw::RootSystem& sys : systems) {
    for (const sw::Characteristic& ch : chars) {
      for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = box.ranges[i].first;
      while (true) {
        sw::Weight lam = sw::Weight::integral(cur);
        sw::Chamber cm = sw::chamber(lam, sys, ch);
        bool typ = sw::is_typical(lam, sys, ch);
        sw::Verdict v = decide(lam, 0, sys, ch);
        std::string conj = conj_min_mn(lam, sys);

        std::string verify_cell;
        if (a.verify) {
          sw::EulerCharacter ec = sw::chi_character(lam, sys);
          bool ok = sw::verify_clearing(ec);
          for (const sw::Root& alpha : sys.simple) {
            if (alpha.parity(d) == 1) {
              ok = ok && sw::check_odd_invariance(lam, sys, alpha);
              break;
            }
          }
          if (!ok) ++verify_failures;
          verify_cell = ok ? "ok" : "FAIL";
        }

        if (csv) {
          std::cout << d.m << ',' << d.n << ',' << csv_field(perm_str(sys.w))
                    << ',' << ch.p << ',' << csv_field(weight_str(lam)) << ','
                    << sw::chamber_name(cm) << ',' << (typ ? 1 : 0) << ','
                    << sw::verdict_tag_name(v.tag) << ',';
          if (v.tag == sw::VerdictTag::ConcentratedAt) std::cout << v.degree;
          std::cout << ',' << v.provenance << ',' << csv_field(v.reason) << ','
                    << conj;
          if (a.verify) std::cout << ',' << verify_cell;
          std::cout << "\n";
        } else {
          json row;
          row["m"] = d.m;
          row["n"] = d.n;
          row["w"] = sys.w.one_line();
          row["p"] = ch.p;
          row["lambda"] = sw::weight_to_json(lam);
          row["chamber"] = sw::chamber_name(cm);
          row["typical"] = typ;
          row["verdict"] = sw::verdict_tag_name(v.tag);
          if (v.tag == sw::VerdictTag::ConcentratedAt) row["degree"] = v.degree;
          row["provenance"] = v.provenance;
          if (!v.reason.empty()) row["reason"] = v.reason;
          if (!conj.empty()) row["conj_min_mn"] = conj == "1";
          if (a.verify) row["verify"] = verify_cell;
          rows_json.push_back(row);
        }

        int pos = k - 1;
        while (pos >= 0 && cur[pos] == box.ranges[pos].second) {
          cur[pos] = box.ranges[pos].first;
          --pos;
        }
        if (pos < 0) break;
        ++cur[pos];
      }
    }
  }

  if (!csv) {
    json out;
    out["rows"] = rows_json;
    out["count"] = rows_json.size();
    std::cout << out.dump(2) << "\n";
  }
  if (a.verify) {
    std::cerr << "verify failures: " << verify_failures << "\n";
    sw::check_internal(verify_failures == 0,
                       "scan --verify found failing identities");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "superweyl: exact root combinatorics, Euler characters and "
      "cohomology-vanishing verdicts for the general linear supergroup"};
  app.require_subcommand(1);

  RootsArgs roots_args;
  CLI::App* roots = app.add_subcommand(
      "roots", "Dump a twisted root system with its invariants");
  roots->add_option("-m", roots_args.m, "first block size")->required();
  roots->add_option("-n", roots_args.n, "second block size")->required();
  roots
      ->add_option("-w", roots_args.w,
                   "one-line permutation, e.g. \"1,3,2\"")
      ->required();
  roots->callback([&] { run_roots(roots_args); });

  PointArgs chi_args;
  CLI::App* chi = app.add_subcommand(
      "chi", "Euler characteristic character of a weight");
  chi->add_option("-m", chi_args.m, "first block size")->required();
  chi->add_option("-n", chi_args.n, "second block size")->required();
  chi->add_option("-w", chi_args.w, "one-line permutation")->required();
  chi->add_option("--lambda", chi_args.lambda,
                  "integer weight, e.g. \"1,0,5\"")
      ->required();
  chi->add_option("--parity", chi_args.parity, "weight parity (0 or 1)")
      ->check(CLI::Range(0, 1));
  chi->callback([&] { run_chi(chi_args); });

  PointArgs verdict_args;
  CLI::App* verdict = app.add_subcommand(
      "verdict", "Cohomology verdict for a weight over a chosen Borel");
  verdict->add_option("-m", verdict_args.m, "first block size")->required();
  verdict->add_option("-n", verdict_args.n, "second block size")->required();
  verdict->add_option("-w", verdict_args.w, "one-line permutation")->required();
  verdict->add_option("--lambda", verdict_args.lambda, "integer weight")
      ->required();
  verdict->add_option("--parity", verdict_args.parity, "weight parity (0 or 1)")
      ->check(CLI::Range(0, 1));
  verdict->add_option("--char", verdict_args.p,
                      "field characteristic (0 or a prime)");
  verdict->callback([&] { run_verdict(verdict_args); });

  ScanArgs scan_args;
  CLI::App* scan = app.add_subcommand(
      "scan", "Batch verdicts over a weight box, CSV or JSON");
  scan->add_option("-m", scan_args.m, "first block size")->required();
  scan->add_option("-n", scan_args.n, "second block size")->required();
  scan->add_option("-w", scan_args.words,
                   "one-line permutation (repeatable)")
      ->required();
  scan->add_option("--char", scan_args.chars,
                   "field characteristic (repeatable, default 0)");
  scan->add_option("--box", scan_args.box,
                   "per-coordinate ranges lo:hi, e.g. \"-2:2,-2:2,0:0\"")
      ->required();
  scan->add_option("--out", scan_args.out, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  scan->add_flag("--verify", scan_args.verify,
                 "re-run clearing and invariance identities per row");
  scan->add_option("--max-rows", scan_args.max_rows,
                   "refuse scans estimated beyond this many rows");
  scan->callback([&] { run_scan(scan_args); });

  CLI::App* selftest = app.add_subcommand(
      "selftest", "Run the full acceptance suite (one PASS/FAIL line each)");
  selftest->callback([] {
    if (!sw::print_acceptance(std::cout))
      sw::fail_internal("acceptance criteria failed");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const sw::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
