#include "domroots/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "domroots/atlas.hpp"
#include "domroots/density.hpp"
#include "domroots/dompoly.hpp"
#include "domroots/errors.hpp"
#include "domroots/io.hpp"
#include "domroots/kernels.hpp"

namespace domroots {

namespace {

enum class Format { kDefault, kJson, kCsv, kPlain };

Format format_from_string(const std::string& s) {
  if (s.empty()) return Format::kDefault;
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  if (s == "plain") return Format::kPlain;
  throw ParseError("unknown format '" + s + "'", 0);
}

Format resolve(Format f, Format fallback) { return f == Format::kDefault ? fallback : f; }

// A graph, a closed form, or both. Families too large for a Graph carry only
// the closed form.
struct Input {
  std::optional<Graph> graph;
  std::optional<ClosedFormSpec> closed;
  std::string label;
};

int parse_int(std::string_view text, std::size_t offset) {
  int v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw ParseError("expected an integer, got '" + std::string(text) + "'", offset);
  }
  if (v < 1) throw DomainError("family parameters must be >= 1");
  return v;
}

Input parse_family(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("family spec needs the form name:params", spec.size());
  const std::string name = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);
  const std::size_t base = colon + 1;

  Input in;
  in.label = spec;
  auto fits = [](long order) { return order <= kMaxVertices; };
  if (name == "star") {
    const int k = parse_int(args, base);
    in.closed = ClosedFormSpec{ClosedFormKind::kStar, k};
    if (fits(k + 1L)) in.graph = star(k);
  } else if (name == "complete") {
    const int n = parse_int(args, base);
    in.closed = ClosedFormSpec{ClosedFormKind::kComplete, n};
    if (fits(n)) in.graph = complete_graph(n);
  } else if (name == "kkk") {
    const int k = parse_int(args, base);
    in.closed = ClosedFormSpec{ClosedFormKind::kKkk, k};
    if (fits(2L * k)) in.graph = complete_bipartite(k, k);
  } else if (name == "k2l") {
    const int l = parse_int(args, base);
    in.closed = ClosedFormSpec{ClosedFormKind::kK2ell, l};
    if (fits(2L + l)) in.graph = complete_bipartite(2, l);
  } else if (name == "kbip") {
    const auto comma = args.find(',');
    if (comma == std::string::npos) throw ParseError("kbip needs two parameters k,l", spec.size());
    const int k = parse_int(std::string_view(args).substr(0, comma), base);
    const int l = parse_int(std::string_view(args).substr(comma + 1), base + comma + 1);
    in.closed = ClosedFormSpec{ClosedFormKind::kCompleteBipartite, k, l};
    if (fits(static_cast<long>(k) + l)) in.graph = complete_bipartite(k, l);
  } else {
    throw ParseError("unknown family '" + name + "' (star, complete, kbip, kkk, k2l)", 0);
  }
  return in;
}

Input resolve_input(const std::string& graph6, const std::string& fam) {
  if (graph6.empty() == fam.empty()) throw ParseError("give exactly one of --graph6 or --family", 0);
  if (!graph6.empty()) {
    Input in;
    in.graph = from_graph6(graph6);
    in.label = graph6;
    return in;
  }
  return parse_family(fam);
}

enum class Method { kAuto, kBrute, kInex };

[[noreturn]] void disagreement(std::ostream& err, const Input& in, const char* a, const Poly& pa, const char* b,
                               const Poly& pb) {
  err << "bug report: " << a << " and " << b << " disagree on " << in.label << "\n";
  if (in.graph) err << "  graph6: " << to_graph6(*in.graph) << "\n";
  err << "  " << a << ": " << poly_to_json(pa).dump() << "\n";
  err << "  " << b << ": " << poly_to_json(pb).dump() << "\n";
  throw InvariantViolation("domination polynomial algorithms disagree");
}

Poly domination_polynomial(const Input& in, Method method, std::ostream& err) {
  if (method == Method::kBrute) {
    if (!in.graph) throw CapacityError("graph exceeds 64 vertices; only --method auto supports closed forms");
    return dom_poly_bruteforce(*in.graph);
  }
  if (method == Method::kInex) {
    if (!in.graph) throw CapacityError("graph exceeds 64 vertices; only --method auto supports closed forms");
    return dom_poly_inclusion_exclusion(*in.graph);
  }

  std::optional<Poly> result;
  if (in.graph && (!in.closed || in.graph->order() <= kernels::kInclusionExclusionCap)) {
    result = dom_poly_inclusion_exclusion(*in.graph);
    if (in.graph->order() <= 12) {
      const Poly brute = dom_poly_bruteforce(*in.graph);
      if (!(brute == *result)) disagreement(err, in, "inclusion-exclusion", *result, "brute-force", brute);
    }
  }
  if (in.closed) {
    const Poly closed = dom_poly_closed_form(*in.closed);
    if (result && !(closed == *result)) disagreement(err, in, "graph algorithm", *result, "closed form", closed);
    result = closed;
  }
  return *result;
}

void print_poly(std::ostream& out, const Poly& p, Format f) {
  switch (f) {
    case Format::kJson:
      out << poly_to_json(p).dump() << "\n";
      break;
    case Format::kCsv:
      out << "k,coeff\n";
      for (int k = 0; k <= p.degree(); ++k) out << k << ',' << p.coeff(k).get_str() << "\n";
      break;
    default:
      out << p.to_string() << "\n";
  }
}

void print_roots(std::ostream& out, const std::vector<RootEnclosure>& roots, Format f) {
  switch (f) {
    case Format::kJson: {
      Json arr = Json::array();
      for (const auto& r : roots) arr.push_back(enclosure_to_json(r));
      out << arr.dump() << "\n";
      break;
    }
    case Format::kCsv:
      out << "root_lo,root_hi,sign_lo,sign_hi,certification\n";
      for (const auto& r : roots) {
        out << to_fixed(r.interval.lo, 12) << ',' << to_fixed(r.interval.hi, 12) << ',' << r.sign_lo << ','
            << r.sign_hi << ',' << to_string(r.note) << "\n";
      }
      break;
    default:
      for (const auto& r : roots) {
        out << to_fixed(r.midpoint(), 9) << "  [" << to_fixed(r.interval.lo, 12) << ", "
            << to_fixed(r.interval.hi, 12) << "]  " << to_string(r.note) << "\n";
      }
  }
}

void print_certificate(std::ostream& out, const WitnessCertificate& c, const VerificationReport& rep,
                       Format f) {
  if (f == Format::kPlain || f == Format::kCsv) {
    out << "family " << to_string(c.family) << " param " << c.param << " m " << c.m << "\n";
    out << "case " << to_string(c.case_tag) << " composed_degree " << c.composed_degree << "\n";
    out << "enclosure [" << to_fraction_string(c.enclosure.interval.lo) << ", "
        << to_fraction_string(c.enclosure.interval.hi) << "] ~ " << to_fixed(c.enclosure.midpoint(), 12) << "\n";
    out << "verified " << (rep.all_passed() ? "yes" : "no") << "\n";
    return;
  }
  Json j = certificate_to_json(c);
  j["verification"] = report_to_json(rep);
  out << j.dump(2) << "\n";
}

void print_report(std::ostream& out, const VerificationReport& rep, Format f) {
  if (f == Format::kJson) {
    out << report_to_json(rep).dump(2) << "\n";
    return;
  }
  for (const auto& c : rep.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
  out << (rep.all_passed() ? "certificate verified" : "certificate REJECTED") << "\n";
}

Rational positive_rational(const std::string& text, const char* what) {
  const Rational q = parse_rational(text);
  if (q <= 0) throw DomainError(std::string(what) + " must be positive");
  return q;
}

int worker_default() {
  const char* env = std::getenv("DOMROOTS_WORKERS");
  if (env == nullptr || *env == '\0') return 0;
  const std::string_view s(env);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 1) {
    throw DomainError("DOMROOTS_WORKERS must be a positive integer, got '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Domination polynomials and their certified real roots"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  std::string format_text;
  std::string tol_text = "1e-9";
  int workers = 0;
  app.add_option("--format", format_text, "json, csv or plain (default depends on the command)")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--tol", tol_text, "enclosure width, exact rational");
  auto* workers_opt = app.add_option("--workers", workers, "worker threads (default: DOMROOTS_WORKERS or all cores)")
                          ->check(CLI::PositiveNumber);

  std::string graph6;
  std::string fam;
  std::string method_text = "auto";
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--graph6", graph6, "graph in graph6 encoding");
    sub->add_option("--family", fam, "star:k, complete:n, kbip:k,l, kkk:k or k2l:l");
    sub->add_option("--method", method_text, "auto, brute or inex")->check(CLI::IsMember({"auto", "brute", "inex"}));
  };

  auto* poly = app.add_subcommand("poly", "print D(G, x)");
  add_input(poly);

  auto* roots = app.add_subcommand("roots", "certified real roots of D(G, x)");
  add_input(roots);
  std::string lo_text;
  std::string hi_text;
  roots->add_option("--lo", lo_text, "window left end (default: minus the Cauchy bound)");
  roots->add_option("--hi", hi_text, "window right end (default 0)");

  auto* compose = app.add_subcommand("compose", "print D(G[K_m], x) = D(G, (1+x)^m - 1)");
  add_input(compose);
  int compose_m = 1;
  compose->add_option("-m", compose_m, "clique order")->required()->check(CLI::PositiveNumber);

  auto* witness = app.add_subcommand("witness", "construct and verify a density witness");
  std::string z_text;
  std::string eps_text;
  SearchBudget budget;
  witness->add_option("-z", z_text, "target z <= 0")->required();
  witness->add_option("-e,--eps", eps_text, "window radius > 0")->required();
  witness->add_option("--max-m", budget.max_m)->check(CLI::PositiveNumber);
  witness->add_option("--max-param", budget.max_param)->check(CLI::PositiveNumber);
  witness->add_option("--max-degree", budget.max_degree)->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "re-check a certificate");
  std::string cert_path;
  verify->add_option("--cert", cert_path, "certificate JSON file, - for stdin")->required();

  auto* atlas = app.add_subcommand("atlas", "root cloud of every graph of order N");
  int atlas_n = 0;
  std::string mode_text = "all_labeled";
  std::string corpus;
  int max_order = 7;
  bool serial = false;
  atlas->add_option("N", atlas_n, "graph order")->required()->check(CLI::PositiveNumber);
  atlas->add_option("--mode", mode_text, "all_labeled, dedup or corpus_file");
  atlas->add_option("--corpus", corpus, "graph6 file for corpus_file mode");
  atlas->add_option("--max-order", max_order, "labeled enumeration cap")->check(CLI::PositiveNumber);
  atlas->add_flag("--serial", serial, "use the single-threaded reference sweep");

  auto* table = app.add_subcommand("table", "smallest real domination root per order");
  int table_n = 9;
  int exhaustive_max = 7;
  table->add_option("N", table_n, "largest order")->check(CLI::PositiveNumber);
  table->add_option("--exhaustive-max", exhaustive_max, "largest exhaustively scanned order");

  auto* growth = app.add_subcommand("growth", "|smallest root| against n / ln n");
  int growth_n = 0;
  growth->add_option("N", growth_n, "largest order")->required();

  auto* star_roots = app.add_subcommand("star-roots", "r_k for k = 1..K with gaps and estimates");
  int star_k = 0;
  star_roots->add_option("K", star_k, "largest k")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Format format = format_from_string(format_text);
    const Rational tol = positive_rational(tol_text, "--tol");
    if (workers_opt->count() == 0) workers = worker_default();
#ifdef _OPENMP
    if (workers > 0) omp_set_num_threads(workers);
#endif
    const Method method = method_text == "brute" ? Method::kBrute
                          : method_text == "inex" ? Method::kInex
                                                  : Method::kAuto;

    if (poly->parsed()) {
      print_poly(out, domination_polynomial(resolve_input(graph6, fam), method, err),
                 resolve(format, Format::kPlain));
    } else if (roots->parsed()) {
      const Poly p = domination_polynomial(resolve_input(graph6, fam), method, err);
      const Rational lo = lo_text.empty() ? Rational(-cauchy_bound(p)) : parse_rational(lo_text);
      const Rational hi = hi_text.empty() ? Rational(0) : parse_rational(hi_text);
      if (!(lo <= hi)) throw DomainError("window needs lo <= hi");
      print_roots(out, isolate_real_roots(p, {lo, hi}, tol), resolve(format, Format::kPlain));
    } else if (compose->parsed()) {
      const Poly p = domination_polynomial(resolve_input(graph6, fam), method, err);
      print_poly(out, compose_with_complete(p, compose_m), resolve(format, Format::kPlain));
    } else if (witness->parsed()) {
      const Rational z = parse_rational(z_text);
      const Rational eps = parse_rational(eps_text);
      const WitnessCertificate cert = construct_witness(z, eps, budget, tol);
      const VerificationReport rep = verify_certificate(cert);
      print_certificate(out, cert, rep, resolve(format, Format::kJson));
      if (!rep.all_passed()) {
        err << "emitted certificate failed verification\n";
        return kExitInvariant;
      }
    } else if (verify->parsed()) {
      Json j;
      try {
        if (cert_path == "-") {
          j = Json::parse(in);
        } else {
          std::ifstream file(cert_path);
          if (!file) throw ParseError("cannot read '" + cert_path + "'", 0);
          j = Json::parse(file);
        }
      } catch (const Json::parse_error& e) {
        throw ParseError(std::string("certificate is not valid JSON: ") + e.what(), e.byte);
      }
      const VerificationReport rep = verify_certificate(certificate_from_json(j));
      print_report(out, rep, resolve(format, Format::kPlain));
      if (!rep.all_passed()) return kExitInvariant;
    } else if (atlas->parsed()) {
      GraphStream stream = [&] {
        switch (enumeration_mode_from_string(mode_text)) {
          case EnumerationMode::kDedup:
            return GraphStream::dedup(atlas_n, max_order);
          case EnumerationMode::kCorpusFile:
            if (corpus.empty()) throw ParseError("corpus_file mode needs --corpus", 0);
            return GraphStream::corpus_file(corpus, atlas_n);
          default:
            return GraphStream::all_labeled(atlas_n, max_order);
        }
      }();
      SweepOptions opts;
      opts.tol = tol;
      opts.threads = workers;
      SweepStats stats;
      if (resolve(format, Format::kCsv) == Format::kJson) {
        Json arr = Json::array();
        for (const auto& r : root_cloud(stream, opts)) {
          arr.push_back({{"graph6", r.graph6},
                         {"n", r.n},
                         {"root_lo", to_fraction_string(r.root_lo)},
                         {"root_hi", to_fraction_string(r.root_hi)}});
        }
        out << arr.dump() << "\n";
      } else {
        stats = write_root_cloud(stream, opts, out, !serial);
        err << stats.graphs << " graphs, " << stats.distinct_polynomials << " distinct polynomials, "
            << stats.escalations << " exact escalations\n";
      }
    } else if (table->parsed()) {
      TableOptions opts;
      opts.exhaustive_max_order = exhaustive_max;
      opts.sweep.tol = tol;
      opts.sweep.threads = workers;
      const auto rows = smallest_root_table(table_n, opts);
      switch (resolve(format, Format::kCsv)) {
        case Format::kJson: {
          Json arr = Json::array();
          for (const auto& r : rows) {
            arr.push_back({{"n", r.n},
                           {"smallest", enclosure_to_json(r.smallest)},
                           {"graph6", r.graph6},
                           {"exhaustive", r.exhaustive},
                           {"matches_star", r.matches_star},
                           {"note", r.note}});
          }
          out << arr.dump(2) << "\n";
          break;
        }
        case Format::kPlain:
          for (const auto& r : rows) {
            out << "n=" << r.n << "  " << to_fixed(r.smallest.midpoint(), 9) << "  " << r.graph6
                << (r.exhaustive ? "  exhaustive" : "  star only") << (r.matches_star ? "  star" : "");
            if (!r.note.empty()) out << "  (" << r.note << ")";
            out << "\n";
          }
          break;
        default:
          out << table_csv(rows);
          for (const auto& r : rows) {
            if (!r.note.empty()) err << "n=" << r.n << ": " << r.note << "\n";
          }
      }
    } else if (growth->parsed()) {
      const auto rows = growth_check(growth_n, tol);
      if (resolve(format, Format::kCsv) == Format::kJson) {
        Json arr = Json::array();
        for (const auto& r : rows) {
          arr.push_back({{"n", r.n}, {"magnitude", r.magnitude}, {"n_over_ln_n", r.n_over_ln_n}, {"ratio", r.ratio}});
        }
        out << arr.dump() << "\n";
      } else {
        out << growth_csv(rows);
      }
    } else if (star_roots->parsed()) {
      const StarGapReport rep = star_gap_report(star_k, tol);
      switch (resolve(format, Format::kCsv)) {
        case Format::kJson: {
          Json arr = Json::array();
          for (const auto& r : rep.records) {
            arr.push_back({{"k", r.k}, {"root", enclosure_to_json(r.root)}, {"gap", r.gap}, {"estimate", r.estimate}});
          }
          out << Json{{"records", arr},
                      {"strictly_increasing", rep.strictly_increasing},
                      {"gap_below_four_from", rep.gap_below_four_from}}
                     .dump()
              << "\n";
          break;
        }
        case Format::kPlain:
          for (const auto& r : rep.records) out << r.k << "  " << to_fixed(r.root.midpoint(), 9) << "\n";
          break;
        default:
          out << star_gap_csv(rep);
      }
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << " (last diagonal " << e.last_diagonal() << ", "
        << e.cells_examined() << " cells examined)\n";
    return kExitCapacity;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}

}  // namespace domroots
