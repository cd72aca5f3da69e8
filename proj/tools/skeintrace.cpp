// skeintrace: command-line front end for the verifiers.
// Exit codes: 0 verified / success, 1 falsified, 2 input error.

#include "CLI11.hpp"
#include "json.hpp"
#include "skein/annulus.hpp"
#include "skein/dilog.hpp"
#include "skein/lift.hpp"
#include "skein/qtorus.hpp"
#include "skein/torus.hpp"
#include "skein/triangulate.hpp"

#include <iostream>
#include <random>

using namespace skein;

namespace {

std::string qvec_str(const QVector& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].get_str();
  return out + "]";
}

int finish(std::vector<VerificationReport> rs, Format fmt, bool inject) {
  if (inject) {
    if (rs.empty()) rs.emplace_back("injected", "");
    rs.front().inject_error();
  }
  std::cout << render(rs, fmt);
  for (auto& r : rs)
    if (!r.verified()) return 1;
  return 0;
}

std::vector<VerificationReport> run_dilog(int N, const std::string& which) {
  std::vector<VerificationReport> rs;
  if (which == "product" || which == "exp" || which == "all") rs.push_back(verify_product_equals_exp(N));
  if (which == "inverse" || which == "all") rs.push_back(verify_psi_times_inverse(N));
  if (which == "recurrence" || which == "all") rs.push_back(verify_recurrence(N));
  if (which == "recurrence" || which == "inverse" || which == "all") rs.push_back(verify_inverse_recurrence(N));
  return rs;
}

std::vector<VerificationReport> run_coproduct(int strands, int length, int random, unsigned seed, int max_sum,
                                              int max_n) {
  std::vector<VerificationReport> rs;
  rs.push_back(verify_coproduct_braids(strands, length, random, seed));
  rs.push_back(verify_aij_coproduct(max_sum));
  rs.push_back(verify_pn_primitive(max_n));
  return rs;
}

int run_lift(const std::string& chart_path, const std::string& diagram_path, const std::string& target, Format fmt,
             bool inject) {
  CoverChart chart = load_chart(chart_path);
  LeafDiagram d = load_diagram(diagram_path);
  nlohmann::ordered_json j;
  std::ostringstream text;
  if (chart.kind == ChartKind::Annular) {
    if (!d.is_braid) throw std::invalid_argument("annular charts take a braid diagram");
    auto L = lift_braid(d.braid);
    j["lifts"] = nlohmann::json::array();
    for (auto& l : L) {
      text << l.weight.str() << " : sheet1 " << l.sheet1.n << " strands [" << l.sheet1.str() << "], sheet2 "
           << l.sheet2.n << " strands [" << l.sheet2.str() << "]\n";
      j["lifts"].push_back({{"weight", l.weight.str()}, {"sheet1", l.sheet1.str()}, {"sheet2", l.sheet2.str()}});
    }
    Tensor2 v = evaluate_braid_lift(L, d.braid.n);
    text << "value: " << v.str() << "\n";
    j["value"] = v.str();
    VerificationReport r = verify_coproduct_on_braid(d.braid);
    if (inject) r.inject_error();
    if (fmt == Format::Json) {
      j["report"] = nlohmann::json::parse(render(r, Format::Json));
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text.str() << render(r, Format::Text);
    }
    return r.verified() ? 0 : 1;
  }
  LiftSum L = enumerate_lifts(d, chart);
  j["lifts"] = nlohmann::json::array();
  for (auto& t : L) {
    text << t.describe() << "\n";
    j["lifts"].push_back(t.describe());
  }
  std::string want = target.empty() ? (chart.kind == ChartKind::Torus ? "gl1" : "trivial") : target;
  if (want == "trivial") {
    if (chart.kind != ChartKind::Planar) throw std::invalid_argument("trivial target needs a planar chart");
    PlanarValue v = evaluate_trivial_cover(L);
    j["value"] = nlohmann::ordered_json::object();
    for (auto& [k, s] : v) {
      std::string key = k == 0 ? "closed" : "strand on sheet " + std::to_string(k);
      text << "value[" << key << "] = " << s.str() << "\n";
      j["value"][key] = s.str();
    }
  } else if (want == "gl1") {
    if (chart.kind != ChartKind::Torus) throw std::invalid_argument("gl1 target needs a torus chart");
    HomologicalValue v = evaluate_homological(L);
    text << "value = " << homological_str(v) << "\n";
    j["value"] = homological_str(v);
  } else {
    throw std::invalid_argument("unknown target " + want);
  }
  if (inject) {
    text << "FALSIFIED (injected)\n";
    j["injected"] = true;
  }
  std::cout << (fmt == Format::Json ? j.dump(2) + "\n" : text.str());
  return inject ? 1 : 0;
}

int run_effectivity(const std::string& path, bool list_all, bool exists, Format fmt, bool inject) {
  IdealTriangulation T = load_triangulation(path);
  auto taut = enumerate_taut(T);
  VerificationReport r("effectivity", path);
  nlohmann::ordered_json j;
  std::ostringstream text;
  j["taut_structures"] = taut.size();
  text << "taut structures: " << taut.size() << "\n";
  j["markings"] = nlohmann::json::array();
  int effective = 0;
  for (auto& m : all_markings(T.tets)) {
    Effectivity e = is_effective(T, m);
    GluingMatrix G = gluing_matrix(T, m);
    bool ok = e.effective ? check_witness(G, e.witness) : check_certificate(G, e.certificate);
    ++r.checked;
    if (!ok) r.fail(m.str(), e.effective ? "witness does not check" : "certificate does not check");
    effective += e.effective;
    if (!e.effective && !list_all) continue;
    std::string data = e.effective ? qvec_str(e.witness) : qvec_str(e.certificate);
    text << m.str() << " " << (e.effective ? "effective, witness " : "not effective, certificate ") << data << "\n";
    nlohmann::ordered_json row;
    row["marking"] = m.str();
    row["effective"] = e.effective;
    row[e.effective ? "witness" : "certificate"] = data;
    j["markings"].push_back(row);
  }
  text << "effective markings: " << effective << "\n";
  j["effective"] = effective;
  if (inject) r.inject_error();
  if (fmt == Format::Json) {
    j["report"] = nlohmann::json::parse(render(r, Format::Json));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text.str() << render(r, Format::Text);
  }
  if (!r.verified()) return 1;
  if (exists) return effective > 0 ? 0 : 1;
  return 0;
}

std::vector<VerificationReport> run_selftest(unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<VerificationReport> rs = run_dilog(8, "all");
  rs.push_back(verify_pentagon(6));
  rs.push_back(verify_sw(5));
  rs.push_back(verify_twisted_pentagon(6));
  rs.push_back(verify_cocycle(3));
  rs.push_back(verify_gl1_pentagon(8));
  rs.push_back(verify_gl1_sw(8));
  rs.push_back(verify_jacobi(3));
  rs.push_back(verify_associativity(10, 5, rng));
  rs.push_back(verify_confluence(10, 5, rng));
  rs.push_back(fock_crosscheck({{{1, 1}, {-1, 1}}, {{1, 0}, {0, 1}}, {{2, 1}, {-1, 1}}}, 4));
  rs.push_back(verify_aij_hecke(3));
  auto cp = run_coproduct(3, 3, 10, seed, 4, 6);
  rs.insert(rs.end(), cp.begin(), cp.end());
  rs.push_back(verify_colored_unknot(5));
  rs.push_back(verify_skein_relation(30, rng));
  rs.push_back(move_invariance_suite(seed, 20));
  return rs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skeintrace: exact checks of skein dilogarithm, wall-crossing, lift and effectivity identities"};
  app.require_subcommand(1);
  std::string format = "text";
  bool inject = false;
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--inject-error", inject, "add a fake residual (test hook)");

  int max_degree = 6, max_weight = 6, max_size = 6, max_sum = 4, strands = 3, length = 4, random = 0, max_n = 6;
  unsigned seed = 1;
  bool twisted = false, gl1 = false, literal = false, all = false, exists = false;
  std::string which = "all", chart, diagram, target, tri;

  auto* dilog = app.add_subcommand("dilog", "skein dilogarithm identities");
  dilog->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);
  dilog->add_option("--which", which)->check(CLI::IsMember({"product", "exp", "inverse", "recurrence", "all"}));
  auto* pent = app.add_subcommand("pentagon", "pentagon relation in the torus skein");
  pent->add_option("--max-weight", max_weight)->check(CLI::NonNegativeNumber);
  pent->add_flag("--twisted", twisted);
  pent->add_flag("--gl1", gl1);
  auto* sw = app.add_subcommand("sw-wcf", "Seiberg-Witten wall-crossing identity");
  sw->add_option("--max-weight", max_weight)->check(CLI::NonNegativeNumber);
  sw->add_flag("--gl1", gl1);
  sw->add_flag("--literal", literal, "use the d=1 middle-factor ratio for every d");
  auto* cop = app.add_subcommand("coproduct", "coproduct theorem for the trivial double cover");
  cop->add_option("--max-strands", strands)->check(CLI::Range(1, 6));
  cop->add_option("--max-length", length)->check(CLI::NonNegativeNumber);
  cop->add_option("--random", random)->check(CLI::NonNegativeNumber);
  cop->add_option("--max-sum", max_sum)->check(CLI::NonNegativeNumber);
  cop->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
  cop->add_option("--seed", seed);
  auto* unk = app.add_subcommand("unknot-id", "two-variable colored unknot identity");
  unk->add_option("--max-size", max_size)->check(CLI::NonNegativeNumber);
  auto* aijc = app.add_subcommand("aij", "A_ij recursion against the Hecke closure oracle");
  aijc->add_option("--max", max_sum)->check(CLI::Range(0, 5));
  auto* lift = app.add_subcommand("lift", "lift a leaf-space diagram to the double cover");
  lift->add_option("--chart", chart)->required()->check(CLI::ExistingFile);
  lift->add_option("--diagram", diagram)->required()->check(CLI::ExistingFile);
  lift->add_option("--target", target)->check(CLI::IsMember({"trivial", "gl1"}));
  auto* eff = app.add_subcommand("effectivity", "effective markings of a taut ideal triangulation");
  eff->add_option("--triangulation", tri)->required()->check(CLI::ExistingFile);
  eff->add_flag("--all-markings", all);
  eff->add_flag("--exists", exists);
  auto* self = app.add_subcommand("selftest", "all property suites");
  self->add_option("--seed", seed);
  for (auto* sc : {dilog, pent, sw, cop, unk, aijc, lift, eff, self}) {
    sc->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sc->add_flag("--inject-error", inject, "add a fake residual (test hook)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    Format fmt = parse_format(format);
    if (*dilog) return finish(run_dilog(max_degree, which), fmt, inject);
    if (*pent) {
      VerificationReport r = gl1 ? verify_gl1_pentagon(max_weight)
                             : twisted ? verify_twisted_pentagon(max_weight)
                                       : verify_pentagon(max_weight);
      std::vector<VerificationReport> rs{r};
      if (twisted) rs.push_back(verify_cocycle(4));
      return finish(rs, fmt, inject);
    }
    if (*sw) return finish({gl1 ? verify_gl1_sw(max_weight) : verify_sw(max_weight, literal)}, fmt, inject);
    if (*cop) return finish(run_coproduct(strands, length, random, seed, max_sum, max_n), fmt, inject);
    if (*unk) return finish({verify_colored_unknot(max_size)}, fmt, inject);
    if (*aijc) return finish({verify_aij_hecke(max_sum)}, fmt, inject);
    if (*lift) return run_lift(chart, diagram, target, fmt, inject);
    if (*eff) return run_effectivity(tri, all, exists, fmt, inject);
    if (*self) return finish(run_selftest(seed), fmt, inject);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
