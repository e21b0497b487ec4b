// Command-line front end: enumerate, decompose, verify, count and export.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "torsion/classify_an.hpp"
#include "torsion/classify_tube.hpp"
#include "torsion/json_io.hpp"
#include "torsion/oracle.hpp"

namespace {

using namespace torsion;
using io::json;

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kMalformed = 3, kBound = 4 };

struct CliError : std::runtime_error {
  CliError(int c, const std::string& what) : std::runtime_error(what), code(c) {}
  int code;
};

struct Target {
  std::optional<int> an;
  std::optional<int> tube;
};

void require_one(const Target& t) {
  if (t.an.has_value() == t.tube.has_value()) throw CliError(kUsage, "give exactly one of --an N or --tube N");
  const int n = t.an ? *t.an : *t.tube;
  if (n < 1) throw CliError(kUsage, "N must be a positive integer");
}

void check_bound(int n, int max_n) {
  if (n > max_n) {
    throw CliError(kBound, "N = " + std::to_string(n) + " exceeds --max-n " + std::to_string(max_n));
  }
}

json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw CliError(kUsage, "cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw CliError(kMalformed, std::string("malformed JSON: ") + e.what());
  }
}

std::vector<io::Certificate> read_certificates(const std::string& path) {
  const json j = read_json(path);
  try {
    return io::parse_certificates(j);
  } catch (const io::CertificateError& e) {
    throw CliError(kMalformed, std::string("malformed certificate: ") + e.what());
  }
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw CliError(kUsage, "cannot write " + path);
  out << text;
}

std::string describe(const Category& cat, const Check& c) {
  std::string s = c.reason;
  if (c.witness) s += " (witness " + cat.label(*c.witness);
  if (c.witness && c.partner) s += ", with " + cat.label(*c.partner);
  if (c.witness) s += ")";
  return s;
}

Category linear_category(int n, int max_n) {
  check_bound(n, max_n);
  try {
    return an::category(n);
  } catch (const std::length_error& e) {
    throw CliError(kBound, e.what());
  }
}

std::vector<ObjectSet> to_sets(const Category& cat, const io::LinearCertificate& c) {
  std::vector<ObjectSet> out;
  for (const auto& part : c.parts) out.push_back(an::to_set(cat, part));
  return out;
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const Target& t, const std::string& format, const std::string& output, int max_n) {
  require_one(t);
  std::ostringstream os;
  json records = json::array();
  if (t.an) {
    const Category cat = linear_category(*t.an, max_n);
    for (const auto& s : enumerate_partitions(linear_An(*t.an), kStrong1, true)) {
      const TorsionPair tp = an::partition_to_tp(cat, s);
      if (format == "text") {
        os << "T=" << cat.label(tp.torsion) << " F=" << cat.label(tp.free)
           << " partition=" << to_string(s) << '\n';
      } else {
        json r = io::pair_to_json(cat, tp);
        r["partition"] = io::to_json(s);
        records.push_back(r);
      }
    }
  } else {
    check_bound(*t.tube, max_n);
    for (const auto& p : tube::enumerate_tube_tps(*t.tube)) {
      if (format == "text") {
        os << tube::to_string(p) << '\n';
      } else {
        records.push_back(io::to_json(p));
      }
    }
  }
  if (format != "text") os << records.dump(2) << '\n';
  write_output(os.str(), output);
  return kOk;
}

// ---------------------------------------------------------------- decompose

int cmd_decompose(const std::string& file, const std::string& side, int max_n) {
  const auto certs = read_certificates(file);
  json results = json::array();
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const auto* c = std::get_if<io::LinearCertificate>(&certs[i]);
    if (!c || c->is_ntp) {
      throw CliError(kMalformed, "decompose expects torsion pair certificates on linear A_n");
    }
    const Category cat = linear_category(c->n, max_n);
    const VertexSet support = c->support.value_or(an::all_vertices(cat));
    const auto sets = to_sets(cat, *c);
    const TorsionPair tp{sets[0], sets[1]};
    if (Check chk = is_torsion_pair(cat, an::support_set(cat, support), tp); !chk) {
      throw CliError(kMalformed, "certificate " + std::to_string(i + 1) +
                                     " is not a torsion pair: " + describe(cat, chk));
    }
    auto one = [&](an::Side s) {
      const auto d = s == an::Side::Left ? an::decompose_left(cat, tp, support)
                                         : an::decompose_right(cat, tp, support);
      json r = io::to_json(cat, d);
      r["roundtrip"] = an::assemble(cat, d.partition, d.residual, support) == tp;
      return r;
    };
    if (side == "both") {
      results.push_back({{"left", one(an::Side::Left)},
                         {"right", one(an::Side::Right)},
                         {"residuals_agree", an::residuals_agree(cat, tp, support)}});
    } else {
      results.push_back(one(side == "left" ? an::Side::Left : an::Side::Right));
    }
  }
  std::cout << (results.size() == 1 ? results[0] : results).dump(2) << '\n';
  return kOk;
}

// ---------------------------------------------------------------- verify

std::string verify_tube(const io::TubeCertificate& c, int cap, int max_n) {
  check_bound(c.rank, max_n);
  if (c.rank * cap > static_cast<int>(ObjectSet::kCapacity)) {
    throw CliError(kBound, "rank * cap exceeds 64 modules");
  }
  tube::TubeSubcatDescriptor torsion, free;
  if (c.partition) {
    tube::TubeTorsionPair p;
    try {
      p = tube::partition_to_tube_tp(c.rank, *c.partition);
    } catch (const std::invalid_argument& e) {
      return e.what();
    }
    if (c.torsion && (!(*c.torsion == p.torsion) || !(*c.free == p.free))) {
      return "descriptors differ from the classification datum";
    }
    torsion = p.torsion;
    free = p.free;
  } else {
    torsion = *c.torsion;
    free = *c.free;
  }
  const Check chk = oracle::check_tube_tp_truncated(torsion, free, cap);
  if (chk) return "";
  const Category cat = tube::category(c.rank, cap);
  return describe(cat, chk) + " [cap " + std::to_string(cap) + "]";
}

int cmd_verify(const std::string& file, int cap, int max_n) {
  if (cap < 2) throw CliError(kUsage, "--cap must be >= 2");
  const auto certs = read_certificates(file);
  bool all_ok = true;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    std::string failure;
    if (const auto* c = std::get_if<io::LinearCertificate>(&certs[i])) {
      const Category cat = linear_category(c->n, max_n);
      const ObjectSet ambient = an::support_set(cat, c->support.value_or(an::all_vertices(cat)));
      const auto sets = to_sets(cat, *c);
      const Check chk = c->is_ntp ? is_ntp(cat, ambient, NTorsionPair{sets})
                                  : is_torsion_pair(cat, ambient, {sets[0], sets[1]});
      if (!chk) failure = describe(cat, chk);
    } else {
      failure = verify_tube(std::get<io::TubeCertificate>(certs[i]), cap, max_n);
    }
    std::cout << "certificate " << i + 1 << ": " << (failure.empty() ? "pass" : "fail: " + failure)
              << '\n';
    all_ok = all_ok && failure.empty();
  }
  return all_ok ? kOk : kFail;
}

// ---------------------------------------------------------------- count

int cmd_count(const Target& t, bool check, int max_n, int cap) {
  require_one(t);
  if (t.an) {
    const int n = *t.an;
    if (n > 32) throw CliError(kBound, "count exceeds 64-bit range");
    const std::uint64_t formula = an::count_torsion_pairs(n);
    std::cout << formula << '\n';
    if (!check) return kOk;
    check_bound(n, max_n);
    const an::CountReport r = an::verify_count(n, max_n);
    std::cout << "formula: " << r.formula << '\n'
              << "partitions: " << r.partitions << '\n'
              << "oracle: " << *r.bruteforce << '\n'
              << "agree: " << (r.agree() ? "true" : "false") << '\n';
    return r.agree() ? kOk : kFail;
  }
  const int rank = *t.tube;
  check_bound(rank, max_n);
  const std::size_t count = tube::enumerate_tube_tps(rank).size();
  std::cout << count << '\n';
  if (!check) return kOk;
  if (cap < 4) throw CliError(kUsage, "--cap must be >= 4 for --check");
  if (rank * cap > static_cast<int>(ObjectSet::kCapacity)) {
    throw CliError(kBound, "rank * cap exceeds 64 modules");
  }
  const std::size_t by_partitions = tube::enumerate_tube_tps_by_partitions(rank).size();
  const std::size_t truncated =
      oracle::stable_tube_torsion_classes(rank, {cap - 2, cap - 1, cap}, oracle::Execution::Parallel)
          .size();
  const bool agree = count == by_partitions && count == truncated;
  std::cout << "classification: " << count << '\n'
            << "partitions: " << by_partitions << '\n'
            << "truncated oracle (caps " << cap - 2 << ".." << cap << "): " << truncated << '\n'
            << "agree: " << (agree ? "true" : "false") << '\n';
  return agree ? kOk : kFail;
}

// ---------------------------------------------------------------- export

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string export_ar(int n) {
  const Quiver q = linear_An(n);
  std::ostringstream os;
  os << "digraph ar_quiver {\n  rankdir=LR;\n";
  for (const auto& x : an::indecomposables(q)) os << "  " << quoted(an::to_string(x)) << ";\n";
  for (const auto& x : an::indecomposables(q)) {
    if (x.a > 1) os << "  " << quoted(an::to_string(x)) << " -> " << quoted(an::to_string({x.a - 1, x.b})) << ";\n";
    if (x.b > x.a) os << "  " << quoted(an::to_string(x)) << " -> " << quoted(an::to_string({x.a, x.b - 1})) << ";\n";
  }
  for (const auto& x : an::indecomposables(q)) {
    if (auto t = an::tau(x, q)) {
      os << "  " << quoted(an::to_string(x)) << " -> " << quoted(an::to_string(*t))
         << " [style=dashed, constraint=false];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string export_lattice(const Category& cat) {
  std::vector<ObjectSet> classes;
  for (const auto& tp : an::enumerate_torsion_pairs(cat)) classes.push_back(tp.torsion);
  std::sort(classes.begin(), classes.end(), [](ObjectSet a, ObjectSet b) {
    return std::pair(a.size(), a.bits()) < std::pair(b.size(), b.bits());
  });
  std::ostringstream os;
  os << "digraph torsion_classes {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    os << "  t" << i << " [label=" << quoted(cat.label(classes[i])) << "];\n";
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (i == j || !classes[i].subset_of(classes[j])) continue;
      bool cover = true;
      for (std::size_t k = 0; k < classes.size() && cover; ++k) {
        if (k != i && k != j && classes[i].subset_of(classes[k]) && classes[k].subset_of(classes[j])) {
          cover = false;
        }
      }
      if (cover) os << "  t" << i << " -> t" << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

int cmd_export(int n, const std::string& dot, const std::string& output, int max_n) {
  if (n < 1) throw CliError(kUsage, "N must be a positive integer");
  const Category cat = linear_category(n, max_n);
  write_output(dot == "ar" ? export_ar(n) : export_lattice(cat), output);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion pairs on linear A_n and tubes"};
  app.require_subcommand(1);

  Target enum_target, count_target;
  std::string format = "json", output, file, side = "left", dot;
  int max_n = 6, cap = 8, export_n = 0;
  bool check = false;

  auto* en = app.add_subcommand("enumerate", "List every torsion pair");
  auto* en_an = en->add_option("--an", enum_target.an, "Linear A_n");
  en->add_option("--tube", enum_target.tube, "Tube of rank N")->excludes(en_an);
  en->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  en->add_option("--output", output, "Write to this file");
  en->add_option("--max-n", max_n, "Largest N accepted");

  auto* de = app.add_subcommand("decompose", "Decompose a torsion pair certificate");
  de->add_option("file", file, "Certificate JSON (- for stdin)")->required();
  de->add_option("--side", side, "left, right or both")->check(CLI::IsMember({"left", "right", "both"}));
  de->add_option("--max-n", max_n, "Largest N accepted");

  auto* ve = app.add_subcommand("verify", "Check certificates");
  ve->add_option("file", file, "Certificate JSON (- for stdin)")->required();
  ve->add_option("--cap", cap, "Length cap for tube certificates");
  ve->add_option("--max-n", max_n, "Largest N accepted");

  auto* co = app.add_subcommand("count", "Count torsion pairs");
  auto* co_an = co->add_option("--an", count_target.an, "Linear A_n");
  co->add_option("--tube", count_target.tube, "Tube of rank N")->excludes(co_an);
  co->add_flag("--check", check, "Cross-check against partitions and the oracle");
  co->add_option("--max-n", max_n, "Largest N accepted");
  co->add_option("--cap", cap, "Length cap for the truncated tube oracle");

  auto* ex = app.add_subcommand("export", "Graphviz export");
  ex->add_option("--an", export_n, "Linear A_n")->required();
  ex->add_option("--dot", dot, "ar or lattice")->required()->check(CLI::IsMember({"ar", "lattice"}));
  ex->add_option("--output", output, "Write to this file");
  ex->add_option("--max-n", max_n, "Largest N accepted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*en) return cmd_enumerate(enum_target, format, output, max_n);
    if (*de) return cmd_decompose(file, side, max_n);
    if (*ve) return cmd_verify(file, cap, max_n);
    if (*co) return cmd_count(count_target, check, max_n, cap);
    if (*ex) return cmd_export(export_n, dot, output, max_n);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
