// JSON forms of monoids, elements and ideals.
//
// Monoid file:
//   {"kind": "finite", "generators": [...], "elements": [...], "identity": 0,
//    "table": [[...], ...]}
//   {"kind": "free", "generators": ["a", "b"]}
//   {"kind": "presented", "generators": ["a", "b"], "relations": [[["a", "b"], []]]}
// Words are arrays of generator names and [] is the identity. Elements of a
// finite monoid may also be written by name.
//
// Ideal file:
//   {"kind": "explicit", "elements": [...]}
//   {"kind": "generated", "generators": [...]}
//   {"kind": "subset", "subset": ["a"], "squared": false}
//   {"kind": "pairset", "pairs": [["a", "b"]]}
//
// Errors carry the JSON pointer of the offending value.

#ifndef MONOID_IDEALS_IO_HPP_
#define MONOID_IDEALS_IO_HPP_

#include <cstddef>   // for size_t
#include <fstream>   // for ifstream
#include <memory>    // for shared_ptr, make_shared
#include <optional>  // for optional
#include <sstream>   // for ostringstream
#include <string>    // for string
#include <variant>   // for visit
#include <vector>    // for vector

#include <json.hpp>

#include "engine.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "ideal_set.hpp"

namespace monoid_ideals {

  using json = nlohmann::ordered_json;

  namespace detail {
    [[noreturn]] inline void parse_fail(std::string const& pointer, std::string const& message) {
      throw Error(ErrorCode::parse_error, (pointer.empty() ? "/" : pointer) + ": " + message);
    }

    [[noreturn]] inline void validation_fail(std::string const& pointer,
                                             std::string const& message) {
      throw Error(ErrorCode::validation_error,
                  (pointer.empty() ? "/" : pointer) + ": " + message);
    }

    inline json const& field(json const& j, std::string const& pointer, char const* key) {
      if (!j.is_object()) {
        parse_fail(pointer, "expected an object");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        parse_fail(pointer + "/" + key, "missing field");
      }
      return *it;
    }

    inline std::string string_at(json const& j, std::string const& pointer) {
      if (!j.is_string()) {
        parse_fail(pointer, "expected a string");
      }
      return j.get<std::string>();
    }

    inline std::vector<std::string> strings_at(json const& j, std::string const& pointer) {
      if (!j.is_array()) {
        parse_fail(pointer, "expected an array of strings");
      }
      std::vector<std::string> result;
      for (std::size_t i = 0; i < j.size(); ++i) {
        result.push_back(string_at(j[i], pointer + "/" + std::to_string(i)));
      }
      return result;
    }

    inline std::size_t index_at(json const& j, std::string const& pointer) {
      if (!j.is_number_integer() || j.get<long long>() < 0) {
        parse_fail(pointer, "expected a non-negative integer");
      }
      return j.get<std::size_t>();
    }

    inline word_type word_at(Alphabet const& a, json const& j, std::string const& pointer) {
      if (!j.is_array()) {
        parse_fail(pointer, "expected a word (array of generator names)");
      }
      word_type w;
      for (std::size_t i = 0; i < j.size(); ++i) {
        auto const p    = pointer + "/" + std::to_string(i);
        auto const name = string_at(j[i], p);
        auto const x    = a.find(name);
        if (!x) {
          validation_fail(p, "\"" + name + "\" is not a generator");
        }
        w.push_back(*x);
      }
      return w;
    }

    inline void reject_unknown_keys(json const&                      j,
                                    std::string const&               pointer,
                                    std::vector<std::string> const& allowed) {
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
          parse_fail(pointer + "/" + it.key(), "unexpected field");
        }
      }
    }
  }  // namespace detail

  //! Parses JSON text, reporting syntax errors with their byte offset.
  inline json parse_json_text(std::string const& text) {
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      throw Error(ErrorCode::parse_error,
                  "/: invalid JSON at byte " + std::to_string(e.byte));
    }
  }

  inline json load_json(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorCode::parse_error, "cannot read " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
  }

  //! Builds an engine from a monoid file. Presented monoids are completed
  //! with \p budget.
  inline AnyEngine parse_monoid(json const& j, CompletionBudget const& budget = {}) {
    using namespace detail;
    auto const kind = string_at(field(j, "", "kind"), "/kind");
    if (kind == "finite") {
      reject_unknown_keys(j, "", {"kind", "generators", "elements", "identity", "table"});
      auto const  names = strings_at(field(j, "", "elements"), "/elements");
      auto const& id_j  = field(j, "", "identity");
      std::size_t identity;
      if (id_j.is_string()) {
        auto it = std::find(names.begin(), names.end(), id_j.get<std::string>());
        if (it == names.end()) {
          validation_fail("/identity", "not an element name");
        }
        identity = static_cast<std::size_t>(it - names.begin());
      } else {
        identity = index_at(id_j, "/identity");
      }
      auto const& t = field(j, "", "table");
      if (!t.is_array()) {
        parse_fail("/table", "expected an array of rows");
      }
      table_type table;
      for (std::size_t r = 0; r < t.size(); ++r) {
        auto const p = "/table/" + std::to_string(r);
        if (!t[r].is_array()) {
          parse_fail(p, "expected an array");
        }
        std::vector<std::size_t> row;
        for (std::size_t c = 0; c < t[r].size(); ++c) {
          row.push_back(index_at(t[r][c], p + "/" + std::to_string(c)));
        }
        table.push_back(std::move(row));
      }
      std::vector<std::size_t> gens;
      if (j.contains("generators")) {
        auto const gnames = strings_at(j["generators"], "/generators");
        for (std::size_t i = 0; i < gnames.size(); ++i) {
          auto it = std::find(names.begin(), names.end(), gnames[i]);
          if (it == names.end()) {
            validation_fail("/generators/" + std::to_string(i), "not an element name");
          }
          gens.push_back(static_cast<std::size_t>(it - names.begin()));
        }
      }
      auto v = FiniteMonoid::validate(names, identity, table, gens);
      if (!v.monoid) {
        std::string detail;
        for (std::size_t i = 0; i < v.errors.size() && i < 8; ++i) {
          detail += (i == 0 ? "" : " ") + v.errors[i].describe();
        }
        throw Error(v.errors.front().code, "/table: " + detail);
      }
      if (!v.monoid->generators_generate()) {
        validation_fail("/generators", "the generators do not generate the monoid");
      }
      return std::make_shared<FiniteMonoid const>(std::move(*v.monoid));
    }
    if (kind == "free") {
      reject_unknown_keys(j, "", {"kind", "generators"});
      auto names = strings_at(field(j, "", "generators"), "/generators");
      try {
        return std::make_shared<FreeMonoid const>(Alphabet(std::move(names)));
      } catch (Error const& e) {
        validation_fail("/generators", e.detail());
      }
    }
    if (kind == "presented") {
      reject_unknown_keys(j, "", {"kind", "generators", "relations"});
      auto     names = strings_at(field(j, "", "generators"), "/generators");
      Alphabet alphabet;
      try {
        alphabet = Alphabet(std::move(names));
      } catch (Error const& e) {
        validation_fail("/generators", e.detail());
      }
      std::vector<relation_type> relations;
      auto const&                rs = field(j, "", "relations");
      if (!rs.is_array()) {
        parse_fail("/relations", "expected an array of [lhs, rhs] pairs");
      }
      for (std::size_t i = 0; i < rs.size(); ++i) {
        auto const p = "/relations/" + std::to_string(i);
        if (!rs[i].is_array() || rs[i].size() != 2) {
          parse_fail(p, "expected [lhs, rhs]");
        }
        relations.emplace_back(word_at(alphabet, rs[i][0], p + "/0"),
                               word_at(alphabet, rs[i][1], p + "/1"));
      }
      return std::make_shared<PresentedMonoid const>(
          PresentedMonoid::complete(std::move(alphabet), std::move(relations), budget));
    }
    parse_fail("/kind", "expected \"finite\", \"free\" or \"presented\"");
  }

  inline json words_json(Alphabet const& a, std::vector<word_type> const& ws) {
    json result = json::array();
    for (auto const& w : ws) {
      result.push_back(a.names_of(w));
    }
    return result;
  }

  inline json serialize_monoid(FiniteMonoid const& m) {
    json gens = json::array();
    for (std::size_t i = 0; i < m.generator_count(); ++i) {
      gens.push_back(m.name(m.generator(i)));
    }
    return json{{"kind", "finite"},
                {"generators", gens},
                {"elements", m.names()},
                {"identity", m.identity()},
                {"table", m.table()}};
  }

  inline json serialize_monoid(FreeMonoid const& m) {
    return json{{"kind", "free"}, {"generators", m.alphabet().names()}};
  }

  inline json serialize_monoid(PresentedMonoid const& m) {
    json rels = json::array();
    for (auto const& [u, v] : m.relations()) {
      rels.push_back(json::array({m.alphabet().names_of(u), m.alphabet().names_of(v)}));
    }
    return json{{"kind", "presented"}, {"generators", m.alphabet().names()}, {"relations", rels}};
  }

  inline json serialize_monoid(AnyEngine const& e) {
    return std::visit([](auto const& p) { return serialize_monoid(*p); }, e);
  }

  //! Finite elements serialise by name, word elements as words.
  template <MonoidEngine E>
  json element_json(E const& engine, element_of<E> const& x) {
    if constexpr (is_finite_engine_v<E>) {
      return engine.name(x);
    } else {
      return engine.alphabet().names_of(x);
    }
  }

  template <MonoidEngine E>
  json elements_json(E const& engine, std::vector<element_of<E>> const& xs) {
    json result = json::array();
    for (auto const& x : xs) {
      result.push_back(element_json(engine, x));
    }
    return result;
  }

  template <MonoidEngine E>
  element_of<E> parse_element(E const& engine, json const& j, std::string const& pointer) {
    using namespace detail;
    if constexpr (is_finite_engine_v<E>) {
      if (j.is_string()) {
        auto const& names = engine.names();
        auto        it    = std::find(names.begin(), names.end(), j.get<std::string>());
        if (it == names.end()) {
          validation_fail(pointer, "\"" + j.get<std::string>() + "\" is not an element");
        }
        return static_cast<std::size_t>(it - names.begin());
      }
      return engine.evaluate(word_at(engine.alphabet(), j, pointer));
    } else if constexpr (is_presented_engine_v<E>) {
      return engine.canonical(word_at(engine.alphabet(), j, pointer));
    } else {
      return word_at(engine.alphabet(), j, pointer);
    }
  }

  template <MonoidEngine E>
  std::vector<element_of<E>> parse_elements(E const& engine, json const& j,
                                            std::string const& pointer) {
    if (!j.is_array()) {
      detail::parse_fail(pointer, "expected an array of elements");
    }
    std::vector<element_of<E>> result;
    for (std::size_t i = 0; i < j.size(); ++i) {
      result.push_back(parse_element(engine, j[i], pointer + "/" + std::to_string(i)));
    }
    return result;
  }

  //! Index of the generator named \p name, or of the generator equal to the
  //! element written as \p j.
  template <MonoidEngine E>
  std::size_t parse_generator(E const& engine, json const& j, std::string const& pointer) {
    auto const name = detail::string_at(j, pointer);
    for (std::size_t i = 0; i < engine.generator_count(); ++i) {
      if (engine.generator_name(i) == name) {
        return i;
      }
    }
    detail::validation_fail(pointer, "\"" + name + "\" is not a generator");
  }

  template <MonoidEngine E>
  struct IdealInput {
    std::string                     kind;
    IdealSet<E>                     ideal;
    std::optional<GeneratorSubset>  subset;
    bool                            squared = false;
    std::optional<GeneratorPairSet> pairs;
  };

  template <MonoidEngine E>
  IdealInput<E> parse_ideal(std::shared_ptr<E const> const& engine, json const& j,
                            std::size_t radius) {
    using namespace detail;
    auto const kind = string_at(field(j, "", "kind"), "/kind");
    if (kind == "explicit") {
      reject_unknown_keys(j, "", {"kind", "elements"});
      auto xs = parse_elements(*engine, field(j, "", "elements"), "/elements");
      try {
        return {kind, IdealSet<E>::from_elements(engine, std::move(xs), radius), {}, false, {}};
      } catch (Error const& e) {
        if (e.code() == ErrorCode::not_an_ideal) {
          throw Error(ErrorCode::not_an_ideal, "/elements: " + e.detail());
        }
        throw;
      }
    }
    if (kind == "generated") {
      reject_unknown_keys(j, "", {"kind", "generators"});
      auto xs = parse_elements(*engine, field(j, "", "generators"), "/generators");
      return {kind, IdealSet<E>::closure(engine, std::move(xs), radius), {}, false, {}};
    }
    if (kind == "subset") {
      reject_unknown_keys(j, "", {"kind", "subset", "squared"});
      auto const& zs = field(j, "", "subset");
      if (!zs.is_array()) {
        parse_fail("/subset", "expected an array of generator names");
      }
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < zs.size(); ++i) {
        members.push_back(parse_generator(*engine, zs[i], "/subset/" + std::to_string(i)));
      }
      bool squared = false;
      if (j.contains("squared")) {
        if (!j["squared"].is_boolean()) {
          parse_fail("/squared", "expected a boolean");
        }
        squared = j["squared"].get<bool>();
      }
      GeneratorSubset z(std::move(members));
      if (z.members.empty()) {
        throw Error(ErrorCode::empty_subset, "/subset: the generator subset Z is empty");
      }
      auto seed = subset_seed(*engine, z, squared);
      return {kind, IdealSet<E>::closure(engine, std::move(seed), radius), z, squared, {}};
    }
    if (kind == "pairset") {
      reject_unknown_keys(j, "", {"kind", "pairs"});
      auto const& ps = field(j, "", "pairs");
      if (!ps.is_array()) {
        parse_fail("/pairs", "expected an array of [s, t] pairs");
      }
      std::vector<GeneratorPairSet::pair_type> pairs;
      for (std::size_t i = 0; i < ps.size(); ++i) {
        auto const p = "/pairs/" + std::to_string(i);
        if (!ps[i].is_array() || ps[i].size() != 2) {
          parse_fail(p, "expected [s, t]");
        }
        pairs.emplace_back(parse_generator(*engine, ps[i][0], p + "/0"),
                           parse_generator(*engine, ps[i][1], p + "/1"));
      }
      GeneratorPairSet f(std::move(pairs));
      if (f.empty()) {
        throw Error(ErrorCode::empty_pairset, "/pairs: the pair set F is empty");
      }
      auto seed = pair_seed(*engine, f);
      return {kind, IdealSet<E>::closure(engine, std::move(seed), radius), {}, false, f};
    }
    parse_fail("/kind", "expected \"explicit\", \"generated\", \"subset\" or \"pairset\"");
  }

  //! Ideal file for an ideal: explicit for finite engines, generated
  //! otherwise.
  template <MonoidEngine E>
  json ideal_json(IdealSet<E> const& ideal) {
    if (ideal.representation() == Representation::explicit_set) {
      return json{{"kind", "explicit"}, {"elements", elements_json(ideal.engine(), ideal.elements())}};
    }
    return json{{"kind", "generated"},
                {"generators", elements_json(ideal.engine(), ideal.generators())}};
  }

  //! The ideal file an input was read from, in normal form.
  template <MonoidEngine E>
  json serialize_ideal(IdealInput<E> const& in) {
    auto const& engine = in.ideal.engine();
    if (in.subset) {
      json z = json::array();
      for (auto s : in.subset->members) {
        z.push_back(engine.generator_name(s));
      }
      return json{{"kind", "subset"}, {"subset", z}, {"squared", in.squared}};
    }
    if (in.pairs) {
      json ps = json::array();
      for (auto const& [s, t] : in.pairs->pairs()) {
        ps.push_back(json::array({engine.generator_name(s), engine.generator_name(t)}));
      }
      return json{{"kind", "pairset"}, {"pairs", ps}};
    }
    if (in.kind == "generated") {
      return json{{"kind", "generated"},
                  {"generators", elements_json(engine, in.ideal.generators())}};
    }
    return ideal_json(in.ideal);
  }

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_IO_HPP_
