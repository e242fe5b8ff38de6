// Command dispatch for the monoid-ideals tool: classify, closure, construct,
// complete, verify and mine.
//
// Exit codes: 0 when the command ran to completion (found counterexamples
// included), 2 on an input error, 3 when a resource or bound limit left no
// verdict at all.

#ifndef MONOID_IDEALS_CLI_HPP_
#define MONOID_IDEALS_CLI_HPP_

#include <algorithm>  // for all_of, reverse
#include <chrono>     // for steady_clock
#include <fstream>    // for ofstream
#include <optional>   // for optional
#include <string>     // for string
#include <variant>    // for visit
#include <vector>     // for vector

#include <CLI11.hpp>

#include "catalog.hpp"
#include "claims.hpp"
#include "constructions.hpp"
#include "element_set.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "predicates.hpp"
#include "report.hpp"

namespace monoid_ideals {

  struct CommandResult {
    //! Null when only help text was requested.
    json        document;
    int         exit_code = 0;
    //! What the tool prints: the JSON document, its text rendering, or help.
    std::string output;
  };

  namespace detail {
    struct Flags {
      std::string                monoid;
      std::string                ideal;
      std::optional<std::size_t> radius;
      std::string                out;
      std::string                format = "json";
      std::uint64_t              seed   = 0;
      bool                       timing = false;
      std::string                what;
      std::size_t                max_rules    = CompletionBudget{}.max_rules;
      std::size_t                max_word_len = CompletionBudget{}.max_word_length;
      std::string                claims       = "all";
      std::size_t                order        = 0;
      std::size_t                generator_radius = 0;
      std::size_t                max_generators   = 2;
      std::size_t                samples          = 100;
    };

    class Timer {
     public:
      explicit Timer(bool on) : _on(on), _start(std::chrono::steady_clock::now()) {}

      std::optional<double> lap() {
        if (!_on) {
          return std::nullopt;
        }
        auto const now = std::chrono::steady_clock::now();
        auto const s   = std::chrono::duration<double>(now - _start).count();
        _start         = now;
        return s;
      }

     private:
      bool                                  _on;
      std::chrono::steady_clock::time_point _start;
    };

    inline std::size_t default_radius(AnyEngine const& e, Flags const& f) {
      if (f.radius) {
        return *f.radius;
      }
      return std::visit(
          [](auto const& p) -> std::size_t {
            using E = typename std::decay_t<decltype(*p)>;
            return is_finite_engine_v<E> ? 0 : is_free_engine_v<E> ? 6 : 5;
          },
          e);
    }

    inline void require_flag(std::string const& value, std::string const& flag) {
      if (value.empty()) {
        throw Error(ErrorCode::validation_error, flag + " is required");
      }
    }

    inline AnyEngine load_monoid(Flags const& f) {
      require_flag(f.monoid, "--monoid");
      return parse_monoid(load_json(f.monoid), CompletionBudget{f.max_rules, f.max_word_len});
    }

    inline json load_ideal(Flags const& f) {
      require_flag(f.ideal, "--ideal");
      return load_json(f.ideal);
    }

    template <MonoidEngine E>
    json members_json(IdealSet<E> const& ideal, std::size_t radius) {
      std::vector<element_of<E>> in, unknown;
      for (auto const& x : ideal.engine().ball(radius).elements) {
        auto const m = ideal.contains(x);
        if (m == Membership::in) {
          in.push_back(x);
        } else if (m == Membership::unknown) {
          unknown.push_back(x);
        }
      }
      json result{{"radius", radius}, {"members", elements_json(ideal.engine(), in)}};
      if (!unknown.empty()) {
        result["unknown"] = elements_json(ideal.engine(), unknown);
      }
      return result;
    }

    template <MonoidEngine E>
    void classify(std::shared_ptr<E const> const& m, json const& file, std::size_t r,
                  Flags const& f, ReportDocument& doc) {
      Timer timer(f.timing);
      auto  add = [&](std::string const& name, Verdict<element_of<E>> const& v) {
        doc.verdicts.push_back(verdict_json(*m, name, v, timer.lap()));
      };
      auto predicates = [&](ElementSet<E> const& set) {
        auto const own = set_predicates(set, r);
        add("setPredicates.associativeSet", own.associative_set);
        add("setPredicates.stronglySimple", own.strongly_simple);
        auto const other = set_predicates(set.complement(), r);
        add("complement.associativeSet", other.associative_set);
        add("complement.stronglySimple", other.strongly_simple);
      };
      std::optional<IdealInput<E>> in;
      try {
        in = parse_ideal(m, file, r);
      } catch (Error const& e) {
        if (e.code() != ErrorCode::not_an_ideal) {
          throw;
        }
        // An explicit set that is not an ideal: report why, and the set
        // predicates, which need no ideal.
        auto xs  = parse_elements(*m, file.at("elements"), "/elements");
        auto set = ElementSet<E>::of_elements(m, xs);
        doc.details["ideal"] = file;
        add("isIdeal", is_ideal(set, r));
        doc.details["skipped"] = {"isPrime", "isAssociative"};
        predicates(set);
        return;
      }
      auto const& q = in->ideal;
      doc.details["ideal"]       = serialize_ideal(*in);
      doc.details["description"] = q.describe();
      auto const mg              = minimal_generators(q);
      doc.details["minimalGenerators"] = elements_json(*m, mg.generators);
      if (!mg.note.empty()) {
        doc.details["minimalGeneratorsNote"] = mg.note;
      }
      timer.lap();
      add("isIdeal", is_ideal(q, r));
      add("isPrime", is_prime(q, r));
      add("isAssociative", is_associative(q, r));
      predicates(ElementSet<E>::of(q));
    }

    template <MonoidEngine E>
    void closure(std::shared_ptr<E const> const& m, json const& file, std::size_t r,
                 ReportDocument& doc) {
      auto const in = parse_ideal(m, file, r);
      auto const mg = minimal_generators(in.ideal);
      doc.details["input"]             = serialize_ideal(in);
      doc.details["ideal"]             = ideal_json(in.ideal);
      doc.details["description"]       = in.ideal.describe();
      doc.details["minimalGenerators"] = elements_json(*m, mg.generators);
      doc.details["exact"]             = in.ideal.exact();
      doc.details["ball"]              = members_json(in.ideal, r);
    }

    template <typename Base>
    json images_json(DerivedPresentation<Base> const& dp) {
      json images = json::object();
      if (dp.kind == DerivedKind::sqrt) {
        auto const& f = *dp.base_to_derived;
        for (std::size_t s = 0; s < dp.base->generator_count(); ++s) {
          images[dp.base->generator_name(s)] = element_json(*dp.derived, f.apply(dp.base->generator(s)));
        }
      } else {
        auto const& f = *dp.derived_to_base;
        for (std::size_t s = 0; s < dp.derived->generator_count(); ++s) {
          images[dp.derived->generator_name(s)] = element_json(*dp.base, f.apply(dp.derived->generator(s)));
        }
      }
      return images;
    }

    template <MonoidEngine E>
    void construct(std::shared_ptr<E const> const& m, Flags const& f, std::size_t r,
                   ReportDocument& doc) {
      if (f.what != "sqrt" && f.what != "square") {
        throw Error(ErrorCode::validation_error, "--what must be sqrt or square");
      }
      if constexpr (is_finite_engine_v<E>) {
        throw Error(ErrorCode::unsupported_engine,
                    "the root and quadratic monoids are built for free and presented monoids");
      } else {
        Timer      timer(f.timing);
        auto const kind = f.what == "sqrt" ? DerivedKind::sqrt : DerivedKind::square;
        auto const dp   = derived_monoid(m, kind, r);
        auto const lap  = timer.lap();
        doc.details["kind"]      = to_string(kind);
        doc.details["monoid"]    = serialize_monoid(*dp.derived);
        doc.details["completion"] = to_string(dp.derived->status());
        doc.details["embedding"] = {
            {"direction", kind == DerivedKind::sqrt ? "M -> sqrt(M)" : "M^2 -> M"},
            {"images", images_json(dp)},
            {"homomorphic", dp.homomorphic}};
        if (!dp.violation.empty()) {
          doc.details["embedding"]["violation"] = dp.violation;
        }
        if (kind == DerivedKind::square) {
          doc.details["discoveryLength"] = dp.discovery_length;
        }
        doc.details["notes"] = dp.notes;
        json source_engine;
        auto add = [&](std::string const& name, Verdict<word_type> const& v, auto const& engine,
                       std::optional<double> s) {
          doc.verdicts.push_back(verdict_json(engine, name, v, s));
        };
        if (kind == DerivedKind::sqrt) {
          add("embedding.multiplicative", dp.multiplicative, *m, lap);
          add("embedding.injective", dp.injective, *m, std::nullopt);
        } else {
          add("embedding.multiplicative", dp.multiplicative, *dp.derived, lap);
          add("embedding.injective", dp.injective, *dp.derived, std::nullopt);
        }
        if (f.ideal.empty()) {
          return;
        }
        auto const p  = parse_ideal(m, load_ideal(f), r).ideal;
        auto const di = derived_ideal(dp, p, r);
        doc.details["derivedIdeal"] = ideal_json(di.ideal);
        if (!di.unrepresentable.empty()) {
          doc.details["unrepresentable"] = elements_json(*m, di.unrepresentable);
        }
        timer.lap();
        auto const c = corollary_check(m, p, r);
        auto const s = timer.lap();
        add("prime(P)", c.prime_p, *m, s);
        add("associative(sqrt(P))", c.associative_root_p, *c.root.derived, std::nullopt);
        add("associative(P)", c.associative_p, *m, std::nullopt);
        add("prime(P^2)", c.prime_square_p, *c.square.derived, std::nullopt);
        doc.details["corollary"] = {{"sqrt(P) associative iff P prime", to_string(c.first)},
                                    {"P associative iff P^2 prime", to_string(c.second)}};
      }
    }

    inline void complete(AnyEngine const& e, ReportDocument& doc) {
      std::visit(
          [&](auto const& p) {
            using E = typename std::decay_t<decltype(*p)>;
            if constexpr (is_finite_engine_v<E>) {
              throw Error(ErrorCode::unsupported_engine,
                          "completion applies to free and presented monoids");
            } else if constexpr (is_free_engine_v<E>) {
              doc.details["status"] = "CONFLUENT";
              doc.details["rules"]  = json::array();
            } else {
              json rules = json::array();
              for (auto const& rule : p->rules()) {
                rules.push_back(json::array(
                    {p->alphabet().names_of(rule.lhs), p->alphabet().names_of(rule.rhs)}));
              }
              doc.details["status"] = to_string(p->status());
              doc.details["rules"]  = rules;
              if (!p->limit().empty()) {
                doc.details["limit"] = p->limit();
              }
            }
          },
          e);
    }

    inline ClaimOptions claim_options(Flags const& f, std::size_t radius) {
      ClaimOptions o;
      o.radius           = radius;
      o.generator_radius = f.generator_radius;
      o.max_generators   = f.max_generators;
      o.samples          = f.samples;
      o.seed             = f.seed;
      o.timing           = f.timing;
      return o;
    }

    inline void verify(AnyEngine const& e, Flags const& f, std::size_t r, ReportDocument& doc) {
      auto const     claims = parse_claim_list(f.claims);
      auto const     o      = claim_options(f, r);
      Instance const instance{f.monoid, e};
      json           skipped = json::array();
      for (auto const& id : claims) {
        try {
          doc.verdicts.push_back(claim_report_json(run_claim(id, instance, o)));
        } catch (Error const& err) {
          if (err.code() != ErrorCode::scope_mismatch) {
            throw;
          }
          skipped.push_back({{"claim", id}, {"reason", err.detail()}});
        }
      }
      doc.details["skipped"] = skipped;
      if (doc.verdicts.empty()) {
        throw Error(ErrorCode::scope_mismatch, "no requested claim applies to this monoid");
      }
    }

    inline void mine_command(Flags const& f, ReportDocument& doc) {
      if (f.order < 1) {
        throw Error(ErrorCode::validation_error, "--order is required");
      }
      auto const claims    = parse_claim_list(f.claims);
      auto const instances = catalog_instances(f.order);
      auto const o         = claim_options(f, f.radius.value_or(0));
      auto const result    = mine(claims, instances, o);
      std::size_t inconclusive = 0;
      for (auto const& r : result.reports) {
        doc.verdicts.push_back(claim_report_json(r));
        inconclusive += r.kind == VerdictKind::inconclusive ? 1 : 0;
      }
      doc.details = {{"order", f.order},
                     {"instances", instances.size()},
                     {"runs", result.runs},
                     {"skipped", result.skipped},
                     {"fails", result.reports.size() - inconclusive},
                     {"inconclusive", inconclusive}};
      if (result.runs > 0 && inconclusive == result.runs) {
        doc.exit_code = 3;
      }
    }

    inline void add_common(CLI::App* sub, Flags& f) {
      sub->add_option("--monoid", f.monoid, "monoid file");
      sub->add_option("--ideal", f.ideal, "ideal file");
      sub->add_option("--radius", f.radius, "ball radius for bounded checks");
      sub->add_option("--out", f.out, "write the report here instead of stdout");
      sub->add_option("--format", f.format, "json or text")
          ->check(CLI::IsMember({"json", "text"}));
      sub->add_option("--seed", f.seed, "seed for random pair sets");
      sub->add_flag("--timing", f.timing, "record wall times (output is then not reproducible)");
      sub->add_option("--max-rules", f.max_rules, "completion rule budget");
      sub->add_option("--max-word-len", f.max_word_len, "completion word length budget");
    }

    inline void add_claim_flags(CLI::App* sub, Flags& f) {
      sub->add_option("--claims", f.claims, "comma-separated claim ids or all");
      sub->add_option("--generator-radius", f.generator_radius,
                      "longest generator word of universe ideals (default min(radius, 3))");
      sub->add_option("--max-generators", f.max_generators,
                      "most generators of a universe ideal");
      sub->add_option("--samples", f.samples, "random pair sets for C9");
    }

    inline json echo_args(CLI::App const* sub) {
      json args = json::object();
      for (auto const* opt : sub->get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help") {
          continue;
        }
        auto name = opt->get_name();
        name      = name.substr(name.find_first_not_of('-'));
        if (opt->get_expected_min() == 0) {
          args[name] = true;
        } else {
          args[name] = opt->as<std::string>();
        }
      }
      return args;
    }
  }  // namespace detail

  //! Runs one command; \p args excludes the program name. Writes the output
  //! to --out when given.
  inline CommandResult execute(std::vector<std::string> args) {
    using namespace detail;
    Flags    f;
    CLI::App app("Associative and prime ideals of monoids", "monoid-ideals");
    app.require_subcommand(1);
    std::vector<std::pair<std::string, std::string>> commands{
        {"classify", "ideal, prime and associative checks of an ideal and its complement"},
        {"closure", "the ideal generated by an ideal file"},
        {"construct", "the root or quadratic monoid, with the corollary for --ideal"},
        {"complete", "Knuth-Bendix completion of a presentation"},
        {"verify", "run claims on one monoid"},
        {"mine", "run claims over all finite monoids up to --order"}};
    for (auto const& [name, help] : commands) {
      auto* sub = app.add_subcommand(name, help);
      add_common(sub, f);
      if (name == "construct") {
        sub->add_option("--what", f.what, "sqrt or square")
            ->check(CLI::IsMember({"sqrt", "square"}));
      }
      if (name == "verify" || name == "mine") {
        add_claim_flags(sub, f);
      }
      if (name == "mine") {
        sub->add_option("--order", f.order, "largest catalog order (1 to 5)");
      }
    }

    ReportDocument doc;
    auto const     first = args.empty() ? std::string() : args.front();
    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (CLI::CallForHelp const&) {
      return {nullptr, 0, app.help()};
    } catch (CLI::ParseError const& e) {
      auto const unknown = app.get_subcommands().empty();
      doc.command        = unknown ? first : app.get_subcommands().front()->get_name();
      doc.error          = {{"code", to_string(unknown ? ErrorCode::unknown_command
                                                       : ErrorCode::validation_error)},
                            {"detail", e.what()}};
      doc.exit_code      = 2;
      auto const j       = doc.to_json();
      return {j, 2, j.dump(2) + "\n"};
    }
    auto const* sub = app.get_subcommands().front();
    doc.command     = sub->get_name();
    doc.args        = echo_args(sub);

    try {
      auto const& cmd = doc.command;
      if (cmd == "mine") {
        mine_command(f, doc);
      } else {
        auto const engine = load_monoid(f);
        auto const r      = default_radius(engine, f);
        doc.engine        = engine_summary(engine);
        if (cmd == "complete") {
          complete(engine, doc);
        } else if (cmd == "verify") {
          verify(engine, f, r, doc);
        } else {
          std::visit(
              [&](auto const& m) {
                if (cmd == "classify") {
                  classify(m, load_ideal(f), r, f, doc);
                } else if (cmd == "closure") {
                  closure(m, load_ideal(f), r, doc);
                } else {
                  construct(m, f, r, doc);
                }
              },
              engine);
        }
        if (!doc.verdicts.empty()
            && std::all_of(doc.verdicts.begin(), doc.verdicts.end(), [](json const& v) {
                 return v["kind"] == "INCONCLUSIVE";
               })) {
          doc.exit_code = 3;
        }
      }
    } catch (Error const& e) {
      doc.error     = {{"code", to_string(e.code())}, {"detail", e.detail()}};
      doc.exit_code = is_resource_error(e.code()) ? 3 : 2;
    }

    auto const j      = doc.to_json();
    auto       output = f.format == "text" ? render_text(j) : j.dump(2) + "\n";
    if (!f.out.empty()) {
      std::ofstream file(f.out, std::ios::binary);
      if (!file) {
        doc.error     = {{"code", "VALIDATION_ERROR"}, {"detail", "cannot write " + f.out}};
        doc.exit_code = 2;
        auto const e  = doc.to_json();
        return {e, 2, e.dump(2) + "\n"};
      }
      file << output;
      return {j, doc.exit_code, ""};
    }
    return {j, doc.exit_code, output};
  }

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_CLI_HPP_
