// The report document every CLI command emits, and its text rendering.

#ifndef MONOID_IDEALS_REPORT_HPP_
#define MONOID_IDEALS_REPORT_HPP_

#include <optional>  // for optional
#include <sstream>   // for ostringstream
#include <string>    // for string
#include <variant>   // for visit

#include "claims.hpp"
#include "engine.hpp"
#include "io.hpp"
#include "verdict.hpp"

namespace monoid_ideals {

  inline constexpr char const* tool_version = "1.0.0";

  template <MonoidEngine E>
  json verdict_json(E const& engine, std::string const& name,
                    Verdict<element_of<E>> const& v,
                    std::optional<double>         seconds = std::nullopt) {
    json result{{"name", name},
                {"kind", to_string(v.kind)},
                {"radius", v.radius ? json(*v.radius) : json(nullptr)},
                {"witness", v.fails() ? elements_json(engine, v.witness) : json(nullptr)}};
    if (!v.note.empty()) {
      result["note"] = v.note;
    }
    if (seconds) {
      result["seconds"] = *seconds;
    }
    return result;
  }

  inline json claim_report_json(ClaimReport const& r) {
    json result{{"name", r.claim},
                {"kind", to_string(r.kind)},
                {"radius", r.radius ? json(*r.radius) : json(nullptr)},
                {"witness", r.kind == VerdictKind::fails ? r.witness : json(nullptr)},
                {"claim", r.claim},
                {"statement", r.statement},
                {"instance", r.instance},
                {"status", r.status},
                {"cases", r.cases},
                {"notes", r.notes}};
    if (r.seconds) {
      result["seconds"] = *r.seconds;
    }
    return result;
  }

  inline json engine_summary(AnyEngine const& e) {
    return std::visit(
        [](auto const& p) -> json {
          using E = typename std::decay_t<decltype(*p)>;
          json gens = json::array();
          for (std::size_t i = 0; i < p->generator_count(); ++i) {
            gens.push_back(p->generator_name(i));
          }
          if constexpr (is_finite_engine_v<E>) {
            return json{{"kind", "finite"}, {"generators", gens}, {"order", p->size()}};
          } else if constexpr (is_free_engine_v<E>) {
            return json{{"kind", "free"}, {"generators", gens}};
          } else {
            return json{{"kind", "presented"},
                        {"generators", gens},
                        {"relations", p->relations().size()},
                        {"rules", p->rules().size()},
                        {"completion", to_string(p->status())},
                        {"homogeneous", p->homogeneous()}};
          }
        },
        e);
  }

  struct ReportDocument {
    std::string command;
    //! Flags as given on the command line, in the order given.
    json args     = json::object();
    json engine   = nullptr;
    json verdicts = json::array();
    json details  = json::object();
    json error    = nullptr;
    int  exit_code = 0;

    json to_json() const {
      return json{{"toolVersion", tool_version},
                  {"command", {{"name", command}, {"args", args}}},
                  {"engine", engine},
                  {"verdicts", verdicts},
                  {"details", details},
                  {"error", error},
                  {"exitCode", exit_code}};
    }
  };

  namespace detail {
    // A finite element is a name; a word element is a list of letter names,
    // written concatenated (E when empty).
    inline std::string element_text(json const& x) {
      if (x.is_string()) {
        return x.get<std::string>();
      }
      if (x.is_array()) {
        if (x.empty()) {
          return "E";
        }
        std::string out;
        for (auto const& l : x) {
          out += l.is_string() ? l.get<std::string>() : l.dump();
        }
        return out;
      }
      return x.dump();
    }

    inline std::string elements_text(json const& xs, char const* open = "(",
                                     char const* close = ")") {
      std::string out = open;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? ", " : "") + element_text(xs[i]);
      }
      return out + close;
    }
  }  // namespace detail

  //! A human rendering: one line per verdict, witnesses with words
  //! concatenated. Of the details only completion rules and the corollary
  //! biconditionals are shown.
  inline std::string render_text(json const& doc) {
    std::ostringstream out;
    out << "monoid-ideals " << doc["toolVersion"].get<std::string>() << ": "
        << doc["command"]["name"].get<std::string>() << "\n";
    if (!doc["engine"].is_null()) {
      auto const& e = doc["engine"];
      out << "engine: " << e["kind"].get<std::string>() << " on "
          << detail::elements_text(e["generators"], "{", "}") << "\n";
    }
    for (auto const& v : doc["verdicts"]) {
      out << v["name"].get<std::string>();
      if (v.contains("instance")) {
        out << " [" << v["instance"].get<std::string>() << "]";
      }
      out << ": " << v["kind"].get<std::string>();
      if (!v["radius"].is_null()) {
        out << " (radius " << v["radius"].get<std::size_t>() << ")";
      }
      if (v.contains("status")) {
        out << " " << v["status"].get<std::string>();
      }
      auto const& w = v["witness"];
      if (!w.is_null()) {
        out << " witness ";
        if (w.is_object()) {
          if (w.contains("ideals")) {
            for (auto const& q : w["ideals"]) {
              out << (q.contains("generators")
                          ? "I" + detail::elements_text(q["generators"])
                          : detail::elements_text(q["elements"], "{", "}"))
                  << " ";
            }
          }
          if (w.contains("elements")) {
            out << detail::elements_text(w["elements"]);
          }
        } else {
          out << detail::elements_text(w);
        }
      }
      if (v.contains("note")) {
        out << " (" << v["note"].get<std::string>() << ")";
      }
      out << "\n";
    }
    auto const& d = doc["details"];
    if (d.contains("status") && d.contains("rules")) {
      out << "completion: " << d["status"].get<std::string>() << ", " << d["rules"].size()
          << " rules\n";
      for (auto const& r : d["rules"]) {
        out << "  " << detail::element_text(r[0]) << " -> " << detail::element_text(r[1]) << "\n";
      }
    }
    if (d.contains("corollary")) {
      for (auto const& [k, v] : d["corollary"].items()) {
        out << k << ": " << v.get<std::string>() << "\n";
      }
    }
    if (!doc["error"].is_null()) {
      out << "error: " << doc["error"]["code"].get<std::string>() << ": "
          << doc["error"]["detail"].get<std::string>() << "\n";
    }
    out << "exit code " << doc["exitCode"].get<int>() << "\n";
    return out.str();
  }

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_REPORT_HPP_
