#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "ncpoly/codes.hpp"
#include "ncpoly/geom/face_lattice.hpp"
#include "ncpoly/nestedsets.hpp"
#include "ncpoly/statepoly.hpp"
#include "ncpoly/toric/graver.hpp"
#include "ncpoly/toric/groebner.hpp"
#include "ncpoly/toric/matrices.hpp"
#include "ncpoly/verify/verify.hpp"

using namespace ncpoly;
using nlohmann::json;

namespace {

constexpr int kNestedGuard = 8;

// Thrown for desk-scale guard violations; exits with status 2.
struct Refusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::string code_file;
  int n = 0;
  std::string l;
  int k = 1;
  std::string method = "alg35";
  std::string weight;
  int degree_bound = 0;
  int jobs = 1;
  std::string suite = "all";
  std::string cache_dir;
  double time_limit = 600;
  bool pretty = false;
};

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("not an integer: " + tok);
    out.push_back(v);
  }
  return out;
}

struct Target {
  codes::NeuralCode code;
  std::vector<toric::Binomial> claimed;  // empty unless star or pair
  int default_bound = 0;
};

Target target(const Options& o) {
  Target t;
  if (!o.code_file.empty()) {
    std::ifstream in(o.code_file);
    if (!in) throw std::invalid_argument("cannot read " + o.code_file);
    std::stringstream text;
    text << in.rdbuf();
    const std::string s = text.str();
    const auto first = s.find_first_not_of(" \t\r\n");
    t.code = first != std::string::npos && s[first] == '{' ? codes::code_from_json(json::parse(s))
                                                             : codes::from_text(s);
    t.default_bound = static_cast<int>(t.code.n()) + 4;
    return t;
  }
  if (o.family == "star") {
    if (o.n < 1) throw std::invalid_argument("star needs --n >= 1");
    if (o.n > verify::kStarGuard) throw Refusal("star codes are limited to n <= 5");
    t.code = codes::star_code(o.n);
    t.claimed = toric::claimed_ugb_star(o.n);
  } else if (o.family == "pair") {
    if (o.n < 1) throw std::invalid_argument("pair needs --n >= 1");
    if (o.n > verify::kPairGuard) throw Refusal("pair codes are limited to n <= 4");
    t.code = codes::pair_code(o.n);
    t.claimed = toric::claimed_ugb_pair(o.n);
  } else if (o.family == "path") {
    const auto ell = parse_ints(o.l);
    if (ell.empty()) throw std::invalid_argument("path needs --l, e.g. --l 5 or --l 2,0,1");
    int curves = 0, length = 0;
    for (int x : ell) {
      if (x < 0) throw std::invalid_argument("path lengths must be nonnegative");
      curves += x + 1;
      length += x;
    }
    if (length > verify::kPathGuard) throw Refusal("path codes are limited to total length <= 6");
    t.code = codes::path_code(ell);
    t.default_bound = curves + 4;
    return t;
  } else {
    throw std::invalid_argument("give a family (star, pair, path) or --code-file");
  }
  long long d = 0;
  for (const auto& b : t.claimed) d = std::max(d, b.degree());
  t.default_bound = static_cast<int>(2 * d + 2);
  return t;
}

int bound_of(const Options& o, const Target& t) { return o.degree_bound > 0 ? o.degree_bound : t.default_bound; }

json binomials(std::span<const toric::Binomial> bs) {
  json out = json::array();
  for (const auto& b : bs) out.push_back(toric::to_string(b));
  return out;
}

json census(std::span<const toric::Binomial> bs) {
  std::map<std::string, int> c;
  for (const auto& b : bs) ++c[std::to_string(b.degree())];
  return c;
}

std::vector<toric::Binomial> ugb_of(const Options& o, const Target& t, json& info) {
  const auto u = toric::ugb(toric::code_matrix(t.code), bound_of(o, t));
  info = {{"method", u.method}, {"degree_bound", u.degree_bound}, {"hit_bound", u.hit_bound}};
  return u.elements;
}

json cmd_code(const Options& o) {
  const Target t = target(o);
  json j = codes::to_json(t.code);
  j["matrix_columns"] = toric::code_matrix(t.code).cols();
  return j;
}

json cmd_graver(const Options& o) {
  const Target t = target(o);
  const IntMatrix m = toric::code_matrix(t.code);
  const auto g = toric::is_homogeneous(m) ? toric::graver(m, bound_of(o, t)) : [&] {
    IntVec sums(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (std::size_t i = 0; i < m.rows(); ++i) sums[j] += m(i, j);
    return toric::graver_graded(m, sums, bound_of(o, t));
  }();
  return {{"elements", binomials(g.elements)},
          {"size", g.elements.size()},
          {"degree_census", census(g.elements)},
          {"degree_bound", g.degree_bound},
          {"hit_bound", g.hit_bound}};
}

json cmd_ugb(const Options& o) {
  const Target t = target(o);
  json info;
  const auto u = ugb_of(o, t, info);
  info["elements"] = binomials(u);
  info["size"] = u.size();
  info["degree_census"] = census(u);
  if (!t.claimed.empty()) {
    auto a = u, b = t.claimed;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    info["equals_claimed"] = a == b;
  }
  return info;
}

json cmd_gb(const Options& o) {
  const Target t = target(o);
  const IntMatrix m = toric::code_matrix(t.code);
  if (!toric::is_homogeneous(m)) {
    // the weighted grevlex harness works without a homogeneity witness
    const auto r = toric::weighted_grevlex_check(t.code, toric::default_three_neuron_weights());
    json j = toric::to_json(r.basis);
    j["max_degree"] = r.max_degree;
    j["pierced_1"] = r.pierced_1;
    j["agrees"] = r.agrees;
    return j;
  }
  json info;
  const auto u = ugb_of(o, t, info);
  toric::WeightOrder ord = toric::WeightOrder::grevlex(m.cols());
  if (!o.weight.empty()) {
    const auto w = parse_ints(o.weight);
    if (w.size() != m.cols()) throw std::invalid_argument("--weight needs one entry per variable");
    ord = toric::WeightOrder(IntVec(w.begin(), w.end()));
  }
  const auto gb = toric::reduced_gb(u, ord);
  json j = toric::to_json(gb);
  j["initial_ideal"] = toric::to_json(toric::initial_ideal(gb));
  j["generators"] = info;
  return j;
}

json polytope_summary(const geom::LatticePolytope& p) {
  const auto h = geom::hull_halfspaces(p);
  json j = geom::to_json(p);
  j["f_vector"] = geom::face_lattice(h).proper_f_vector();
  j["dimension"] = h.dimension();
  return j;
}

json cmd_state_polytope(const Options& o) {
  const Target t = target(o);
  json info;
  const auto u = ugb_of(o, t, info);
  json j = {{"ugb", info}};
  if (u.empty()) {
    j["note"] = "toric ideal is zero; the state polytope is a point";
    return j;
  }
  std::optional<geom::LatticePolytope> a, b;
  if (o.method == "alg35" || o.method == "both") {
    const auto r = statepoly::state_polytope_alg35(u);
    a = r.polytope;
    j["alg35"] = polytope_summary(r.polytope);
    json ideals = json::array();
    for (const auto& v : r.vertices) ideals.push_back({{"weight", v.weight}, {"initial_ideal", toric::to_json(v.ideal)}});
    j["alg35"]["initial_ideals"] = ideals;
  }
  if (o.method == "fibers" || o.method == "both") {
    b = statepoly::state_polytope_fibers(toric::code_matrix(t.code), u);
    j["fibers"] = polytope_summary(*b);
  }
  if (a && b) {
    const auto agree = statepoly::methods_agree(*a, *b, 1000, 0x5eed);
    j["agree"] = agree.agree;
    j["weights_tested"] = agree.weights_tested;
    if (!agree.agree) j["detail"] = agree.detail;
  }
  return j;
}

json cmd_pierced(const Options& o) {
  const Target t = target(o);
  const auto d = codes::to_abstract(t.code);
  json j = {{"k", o.k}};
  try {
    const auto r = codes::is_inductively_pierced(d, o.k);
    j["pierced"] = r.pierced;
    json removals = json::array();
    for (const auto& w : r.removals) removals.push_back(codes::to_json(w));
    j["removals"] = removals;
  } catch (const std::length_error& e) {
    throw Refusal(e.what());
  }
  return j;
}

json cmd_nested(const Options& o) {
  if (o.n < 1) throw std::invalid_argument("nested needs --n >= 1");
  if (o.n > kNestedGuard) throw Refusal("nested is limited to n <= 8");
  const auto b = nested::building_closure(nested::index_family(o.n));
  const auto sets = nested::maximal_nested_sets(b);
  json all = json::array();
  for (const auto& s : sets) all.push_back(nested::nested_to_json(s));
  return {{"n", o.n},
          {"building_set", nested::to_json(b)},
          {"count", sets.size()},
          {"count_formula", nested::vertex_count_formula(o.n)},
          {"maximal_nested_sets", all}};
}

std::optional<verify::Cache> open_cache(const Options& o) {
  const auto dir = verify::resolve_cache_dir(o.cache_dir.empty() ? std::nullopt : std::optional(o.cache_dir));
  if (!dir) return std::nullopt;
  return verify::Cache(*dir);
}

json cmd_conjecture(const Options& o) {
  const auto ell = parse_ints(o.l);
  if (ell.size() != 1) throw std::invalid_argument("conjecture needs --l L (a single length)");
  if (ell[0] > verify::kPathGuard) throw Refusal("conjecture is limited to l <= 6");
  const int n = o.n > 0 ? o.n : ell[0] + 1;
  const auto cache = open_cache(o);
  return verify::to_json(verify::conjecture_pipeline(ell[0], n, cache ? &*cache : nullptr));
}

void print(const json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

// Runs fn with a wall-clock limit; on timeout prints a refusal and exits 2.
int guarded(double seconds, bool pretty, const std::function<int()>& fn) {
  std::packaged_task<int()> task(fn);
  auto done = task.get_future();
  std::thread(std::move(task)).detach();
  if (done.wait_for(std::chrono::duration<double>(seconds)) == std::future_status::timeout) {
    print({{"refused", "wall-clock limit of " + std::to_string(seconds) + " s exceeded"}}, pretty);
    std::cout.flush();
    std::_Exit(2);
  }
  return done.get();
}

int run_json(const Options& o, json (*cmd)(const Options&)) {
  return guarded(o.time_limit, o.pretty, [&] {
    try {
      print(cmd(o), o.pretty);
      return 0;
    } catch (const Refusal& e) {
      print({{"refused", e.what()}}, o.pretty);
      return 2;
    } catch (const std::exception& e) {
      print({{"error", e.what()}}, o.pretty);
      return 1;
    }
  });
}

int cmd_verify(const Options& o) {
  const auto suite = verify::parse_suite(o.suite);
  if (!suite) {
    print({{"error", "unknown suite " + o.suite}}, o.pretty);
    return 1;
  }
  std::optional<verify::Cache> cache;
  try {
    cache = open_cache(o);
  } catch (const std::exception& e) {
    print({{"error", e.what()}}, o.pretty);
    return 1;
  }
  verify::SuiteOptions opts;
  opts.suite = *suite;
  if (o.n > 0) opts.n_max = o.n;
  opts.jobs = o.jobs;
  opts.cache = cache ? &*cache : nullptr;
  return guarded(o.time_limit, o.pretty, [&] {
    const auto res = verify::run_suite(opts);
    if (res.refusal) print({{"refused", *res.refusal}}, o.pretty);
    for (const auto& r : res.reports) print(verify::to_json(r), o.pretty);
    return res.exit_code();
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric ideals, state polytopes and nested sets of combinatorial neural codes"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--pretty", o.pretty, "Indented JSON");
    sub->add_option("--time-limit", o.time_limit, "Wall-clock limit in seconds")->check(CLI::PositiveNumber);
  };
  auto family = [&](CLI::App* sub) {
    sub->add_option("family", o.family, "star, pair or path")->check(CLI::IsMember({"star", "pair", "path"}));
    sub->add_option("--code-file", o.code_file, "Code as text (one word per line) or JSON");
    sub->add_option("--n", o.n, "Size parameter of star and pair codes");
    sub->add_option("--l", o.l, "Path lengths, comma separated");
    common(sub);
  };
  auto bound = [&](CLI::App* sub) {
    sub->add_option("--degree-bound", o.degree_bound,
                    "Graver degree bound (default 2 * max claimed degree + 2, or curves + 4)")
        ->check(CLI::PositiveNumber);
  };

  auto* code = app.add_subcommand("code", "Print a code and its size");
  family(code);
  auto* gb = app.add_subcommand("gb", "Reduced Gröbner basis under a weight order");
  family(gb);
  bound(gb);
  gb->add_option("--weight", o.weight, "Weight vector, comma separated (default grevlex)");
  auto* graver = app.add_subcommand("graver", "Graver basis up to the degree bound");
  family(graver);
  bound(graver);
  auto* ugb = app.add_subcommand("ugb", "Universal Gröbner basis");
  family(ugb);
  bound(ugb);
  auto* sp = app.add_subcommand("state-polytope", "State polytope by the alg35 construction and/or Gröbner fibers");
  family(sp);
  bound(sp);
  sp->add_option("--method", o.method, "alg35, fibers or both")->check(CLI::IsMember({"alg35", "fibers", "both"}));
  auto* pierced = app.add_subcommand("pierced", "k-inductive piercing with a removal certificate");
  family(pierced);
  pierced->add_option("--k", o.k, "Piercing order")->check(CLI::NonNegativeNumber);
  auto* nest = app.add_subcommand("nested", "Maximal nested sets of the closure of the index family");
  nest->add_option("--n", o.n, "n")->required();
  common(nest);
  auto* conj = app.add_subcommand("conjecture", "Face numbers of the state polytope of P(l,0,…,0)");
  conj->add_option("--l", o.l, "l")->required();
  conj->add_option("--n", o.n, "Length of ℓ (default l + 1)");
  conj->add_option("--cache-dir", o.cache_dir, std::string("Cache directory (else $") + verify::kCacheDirEnv + ")");
  common(conj);
  auto* ver = app.add_subcommand("verify-paper", "Run the acceptance checks; JSON lines sorted by id");
  ver->alias("verify");
  ver->add_option("--suite", o.suite, "star, pair, path or all")->check(CLI::IsMember({"star", "pair", "path", "all"}));
  ver->add_option("--n", o.n, "Largest n (per family guard)");
  ver->add_option("--jobs", o.jobs, "Checks run concurrently")->check(CLI::PositiveNumber);
  ver->add_option("--cache-dir", o.cache_dir, std::string("Cache directory (else $") + verify::kCacheDirEnv + ")");
  common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (code->parsed()) return run_json(o, cmd_code);
  if (gb->parsed()) return run_json(o, cmd_gb);
  if (graver->parsed()) return run_json(o, cmd_graver);
  if (ugb->parsed()) return run_json(o, cmd_ugb);
  if (sp->parsed()) return run_json(o, cmd_state_polytope);
  if (pierced->parsed()) return run_json(o, cmd_pierced);
  if (nest->parsed()) return run_json(o, cmd_nested);
  if (conj->parsed()) return run_json(o, cmd_conjecture);
  return cmd_verify(o);
}
