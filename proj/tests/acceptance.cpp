// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Time limits are wall-clock seconds on this machine.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "monoid_ideals.hpp"
#include "monoid_ideals/cli.hpp"
#include "oracles.hpp"

using namespace monoid_ideals;

namespace {

  constexpr double ac1_seconds = 5;
  constexpr double ac2_seconds = 60;
  constexpr double ac3_seconds = 300;
  constexpr double ac4_seconds = 5;

  constexpr std::size_t ac2_samples  = 100;
  constexpr std::size_t ac2_radius   = 5;
  constexpr std::uint64_t ac2_seed   = 0;
  constexpr std::size_t ac11_cases   = 10000;
  constexpr std::uint64_t ac11_seed  = 1;

  struct Outcome {
    bool        pass = true;
    std::string detail;

    void require(bool condition, std::string const& what) {
      if (!condition) {
        pass = false;
        detail += (detail.empty() ? "" : "; ") + what;
      }
    }
  };

  std::string sample(std::string const& name) {
    return std::string(MONOID_IDEALS_SAMPLES) + "/" + name;
  }

  word_type letters(std::string const& s) {
    word_type result;
    for (char c : s) {
      result.push_back(static_cast<letter_type>(c - 'a'));
    }
    return result;
  }

  std::shared_ptr<FreeMonoid const> free_on(std::size_t k) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) {
      names.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    return std::make_shared<FreeMonoid const>(Alphabet(names));
  }

  json verdict(json const& doc, std::string const& name) {
    for (auto const& v : doc.at("verdicts")) {
      if (v.at("name") == name) {
        return v;
      }
    }
    return json{{"kind", "MISSING"}, {"witness", nullptr}};
  }

  double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }

  std::string fixed(double x) {
    std::ostringstream s;
    s.precision(2);
    s << std::fixed << x;
    return s.str();
  }

  void time_limit(Outcome& o, double elapsed, double limit) {
    o.require(elapsed < limit, "took " + fixed(elapsed) + " s, limit " + fixed(limit) + " s");
    o.detail += (o.detail.empty() ? "" : "; ") + fixed(elapsed) + " s";
  }

  Outcome ac1() {
    Outcome    o;
    auto const start = std::chrono::steady_clock::now();
    auto classify    = [](std::string const& ideal) {
      return execute({"classify", "--monoid", sample("free_ab.json"), "--ideal", sample(ideal),
                      "--radius", "6"})
          .document;
    };
    auto const a  = classify("gen_a.json");
    auto const aa = classify("gen_aa.json");
    o.require(verdict(a, "isPrime").at("kind") == "HOLDS_UP_TO_BOUND", "I(a) prime");
    o.require(verdict(aa, "isPrime").at("kind") == "FAILS", "I(aa) prime kind");
    o.require(verdict(aa, "isPrime").at("witness") == json::parse(R"([["a"], ["a"]])"),
              "I(aa) prime witness");
    o.require(verdict(aa, "isAssociative").at("kind") == "HOLDS_UP_TO_BOUND",
              "I(aa) associative");
    o.require(verdict(aa, "isAssociative").at("radius") == 6, "radius 6");
    time_limit(o, seconds_since(start), ac1_seconds);
    return o;
  }

  Outcome ac2() {
    Outcome         o;
    auto const      start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(ac2_seed);
    std::size_t     fails = 0, holds = 0;
    for (std::size_t i = 0; i < ac2_samples; ++i) {
      std::size_t const k = 2 + rng() % 2;
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      while (pairs.empty()) {
        for (std::size_t s = 0; s < k; ++s) {
          for (std::size_t t = 0; t < k; ++t) {
            if (rng() % 2) {
              pairs.emplace_back(s, t);
            }
          }
        }
      }
      auto const q = ideal_from_pairs(free_on(k), GeneratorPairSet(pairs), ac2_radius);
      fails += q.associative.fails() ? 1 : 0;
      holds += q.associative.holds() ? 1 : 0;
    }
    o.require(fails == 0, std::to_string(fails) + " FAILS");
    o.require(holds == ac2_samples, std::to_string(ac2_samples - holds) + " not HOLDS");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(ac2_samples) + " pair sets";
    time_limit(o, seconds_since(start), ac2_seconds);
    return o;
  }

  Outcome ac3() {
    Outcome      o;
    auto const   start = std::chrono::steady_clock::now();
    ClaimOptions options;
    options.radius       = 0;
    auto const instances = catalog_instances(4);
    auto const result    = mine({"C1"}, instances, options);
    o.require(instances.size() == 45, "catalog has " + std::to_string(instances.size()) + " monoids");
    o.require(result.reports.empty(), std::to_string(result.reports.size()) + " reports");
    o.require(result.runs == instances.size(), "not every instance ran");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(result.runs) + " monoids";
    time_limit(o, seconds_since(start), ac3_seconds);
    return o;
  }

  Outcome ac4() {
    Outcome        o;
    auto const     start = std::chrono::steady_clock::now();
    Instance const instance{"Free(a,b)", free_on(2)};
    ClaimOptions   options;
    options.radius = 3;
    auto const r   = run_claim("C3", instance, options);
    o.require(r.kind == VerdictKind::fails && r.status == "CONFIRMED", "no witness found");
    if (r.kind == VerdictKind::fails) {
      auto const replayed = replay(r, instance);
      o.require(replayed.reproduced, "witness does not replay: " + replayed.detail);
      o.detail += "witness " + r.witness.dump();
    }
    time_limit(o, seconds_since(start), ac4_seconds);
    return o;
  }

  Outcome ac5() {
    Outcome      o;
    ClaimOptions options;
    options.radius       = 0;
    auto const instances = catalog_instances(3);
    auto const result    = mine({"C4", "C5", "C6"}, instances, options);
    o.require(result.reports.empty(), std::to_string(result.reports.size()) + " reports");
    o.require(result.runs == 3 * instances.size(), "not every run completed");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(result.runs) + " runs";
    return o;
  }

  Outcome ac6() {
    Outcome    o;
    auto const q = IdealSet<FreeMonoid>::closure(free_on(1), {letters("aaa")}, 3);
    auto const v = is_associative(q, 3);
    o.require(v.fails(), "did not fail");
    o.require(v.witness == std::vector<word_type>{letters("a"), letters("a"), letters("a")},
              "witness is not (a, a, a)");
    return o;
  }

  Outcome ac7() {
    Outcome    o;
    auto const m = PresentedMonoid::complete(Alphabet({"a", "b"}), {{letters("ab"), {}}});
    o.require(m.status() == CompletionStatus::confluent, "not confluent");
    o.require(m.rules() == std::vector<Rule>{{letters("ab"), {}}}, "rule set is not {ab → ε}");
    o.require(m.normalize(letters("aabb")).word.empty(), "aabb does not normalize to ε");
    o.require(m.normalize(letters("ba")).word == letters("ba"), "ba is not a normal form");
    std::size_t checked = 0;
    for (auto const& x : oracle::words_up_to(2, 6)) {
      auto const nf = oracle::rewrite({{letters("ab"), {}}}, x);
      auto const a  = std::find(nf.begin(), nf.end(), 0U);
      bool const shape = std::all_of(a, nf.end(), [](auto l) { return l == 0U; });
      if (m.normalize(x).word != nf || !shape) {
        o.require(false, "disagrees on a word of length " + std::to_string(x.size()));
        break;
      }
      ++checked;
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(checked) + " words";
    return o;
  }

  Outcome ac8() {
    Outcome    o;
    auto const m = free_on(1);
    auto const r = corollary_check(m, IdealSet<FreeMonoid>::closure(m, {letters("a")}, 5), 5);
    o.require(r.prime_p.holds(), "prime(P)");
    o.require(r.associative_root_p.holds(), "associative(sqrt P)");
    o.require(r.associative_p.holds(), "associative(P)");
    o.require(r.prime_square_p.holds(), "prime(P²)");
    o.require(r.first == Consistency::consistent, "first biconditional");
    o.require(r.second == Consistency::consistent, "second biconditional");
    return o;
  }

  Outcome ac9() {
    Outcome    o;
    auto const fm3 = std::make_shared<FiniteMonoid const>(
        FiniteMonoid::make({"E", "a", "z"}, 0, {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, {1}));
    auto const r = topology_continuity(fm3);
    o.require(r.continuous, "not continuous");
    // ∅, {z}, {a, z}, M as masks over (E, a, z).
    o.require(r.opens == std::vector<element_mask>{0b000, 0b100, 0b110, 0b111},
              "opens differ from {∅, {z}, {a,z}, M}");
    return o;
  }

  Outcome ac10() {
    Outcome                               o;
    std::vector<std::vector<std::string>> commands{
        {"classify", "--monoid", sample("free_ab.json"), "--ideal", sample("gen_ab.json"),
         "--radius", "5"},
        {"closure", "--monoid", sample("fm3.json"), "--ideal", sample("fm3_z.json")},
        {"construct", "--monoid", sample("free_ab.json"), "--what", "square", "--ideal",
         sample("gen_a.json"), "--radius", "3"},
        {"complete", "--monoid", sample("braid.json")},
        {"verify", "--monoid", sample("free_abc.json"), "--claims", "C9", "--radius", "3",
         "--seed", "42"},
        {"mine", "--order", "3", "--claims", "all", "--seed", "42"}};
    for (auto const& c : commands) {
      o.require(execute(c).output == execute(c).output, c.front() + " output differs");
    }
    std::size_t files = 0;
    for (auto const& entry : std::filesystem::directory_iterator(MONOID_IDEALS_SAMPLES)) {
      auto const j    = load_json(entry.path().string());
      auto const kind = j.at("kind").get<std::string>();
      if (kind == "finite" || kind == "free" || kind == "presented") {
        auto const once = serialize_monoid(parse_monoid(j));
        o.require(once == j && serialize_monoid(parse_monoid(once)) == once,
                  entry.path().filename().string() + " does not round-trip");
        ++files;
      }
    }
    for (auto const& [monoid, ideal] :
         std::vector<std::pair<std::string, std::string>>{{"free_ab.json", "gen_a.json"},
                                                          {"free_ab.json", "gen_aa.json"},
                                                          {"free_ab.json", "gen_ab.json"},
                                                          {"free_a.json", "gen_aaa.json"},
                                                          {"free_ab.json", "pairset_ab.json"},
                                                          {"free_ab.json", "subset_a_squared.json"},
                                                          {"fm3.json", "fm3_z.json"},
                                                          {"fm3.json", "fm3_az.json"}}) {
      auto const j = load_json(sample(ideal));
      std::visit(
          [&](auto const& m) {
            auto const once = serialize_ideal(parse_ideal(m, j, 2));
            o.require(once == j && serialize_ideal(parse_ideal(m, once, 2)) == once,
                      ideal + " does not round-trip");
          },
          parse_monoid(load_json(sample(monoid))));
      ++files;
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(commands.size())
                + " commands, " + std::to_string(files) + " files";
    return o;
  }

  Outcome ac11() {
    Outcome         o;
    std::mt19937_64 rng(ac11_seed);
    std::size_t     disagreements = 0;
    auto random_word = [&](std::size_t k, std::size_t min, std::size_t max) {
      word_type w(min + rng() % (max - min + 1));
      for (auto& l : w) {
        l = static_cast<letter_type>(rng() % k);
      }
      return w;
    };
    for (std::size_t i = 0; i < ac11_cases; ++i) {
      std::size_t const      k = 1 + rng() % 3;
      std::vector<word_type> patterns(1 + rng() % 4);
      for (auto& p : patterns) {
        p = random_word(k, 1, 4);
      }
      auto const word = random_word(k, 0, 16);
      auto const q    = IdealSet<FreeMonoid>::closure(free_on(k), patterns, 0);
      if (q.contains(word) != to_membership(oracle::has_any_factor(patterns, word))) {
        ++disagreements;
      }
    }
    o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(ac11_cases) + " cases";
    return o;
  }

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 I(a) prime and I(aa) associative not prime on Free(a,b), radius 6", ac1},
      {"AC2 random pair sets give associative ideals", ac2},
      {"AC3 prime implies associative on all monoids of order <= 4", ac3},
      {"AC4 intersection counterexample found and replayed", ac4},
      {"AC5 complement and difference claims on order <= 3", ac5},
      {"AC6 I(aaa) in Free(a) is not associative", ac6},
      {"AC7 bicyclic completion and normal forms", ac7},
      {"AC8 corollary instance Free(a), P = I(a), radius 5", ac8},
      {"AC9 FM3 topology and continuity", ac9},
      {"AC10 deterministic output and sample round-trip", ac10},
      {"AC11 factor membership agrees with substring scan", ac11}};
  int failed = 0;
  for (auto const& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (std::exception const& e) {
      o.pass   = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %s (%s)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
