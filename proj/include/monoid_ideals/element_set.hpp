// Arbitrary element sets built from ideals and finite lists by the set
// operations, with three-valued (Kleene) membership.

#ifndef MONOID_IDEALS_ELEMENT_SET_HPP_
#define MONOID_IDEALS_ELEMENT_SET_HPP_

#include <algorithm>  // for binary_search
#include <cstddef>    // for size_t
#include <memory>     // for shared_ptr, make_shared
#include <span>       // for span
#include <string>     // for string
#include <vector>     // for vector

#include "engine.hpp"
#include "errors.hpp"
#include "ideal_set.hpp"
#include "verdict.hpp"

namespace monoid_ideals {

  template <MonoidEngine E>
  class ElementSet {
   public:
    using element_type = element_of<E>;

    enum class Op { empty, full, ideal, elements, set_union, intersection, difference, complement };

    struct Node {
      Op                                   op = Op::empty;
      std::shared_ptr<IdealSet<E> const>   ideal;
      std::vector<element_type>            elements;
      std::shared_ptr<Node const>          lhs;
      std::shared_ptr<Node const>          rhs;
    };

    static ElementSet of(IdealSet<E> ideal) {
      return of(std::make_shared<IdealSet<E> const>(std::move(ideal)));
    }

    static ElementSet of(std::shared_ptr<IdealSet<E> const> ideal) {
      auto node   = std::make_shared<Node>();
      node->op    = Op::ideal;
      auto engine = ideal->engine_ptr();
      node->ideal = std::move(ideal);
      return ElementSet(std::move(engine), std::move(node));
    }

    static ElementSet of_elements(std::shared_ptr<E const> engine,
                                  std::vector<element_type> xs) {
      for (auto const& x : xs) {
        require_element(*engine, x);
      }
      sort_unique<E>(xs);
      auto node      = std::make_shared<Node>();
      node->op       = Op::elements;
      node->elements = std::move(xs);
      return ElementSet(std::move(engine), std::move(node));
    }

    static ElementSet full(std::shared_ptr<E const> engine) {
      auto node = std::make_shared<Node>();
      node->op  = Op::full;
      return ElementSet(std::move(engine), std::move(node));
    }

    static ElementSet empty(std::shared_ptr<E const> engine) {
      return ElementSet(std::move(engine), std::make_shared<Node>());
    }

    friend ElementSet operator|(ElementSet const& a, ElementSet const& b) {
      return combine(Op::set_union, a, b);
    }

    friend ElementSet operator&(ElementSet const& a, ElementSet const& b) {
      return combine(Op::intersection, a, b);
    }

    friend ElementSet operator-(ElementSet const& a, ElementSet const& b) {
      return combine(Op::difference, a, b);
    }

    ElementSet complement() const {
      auto node = std::make_shared<Node>();
      node->op  = Op::complement;
      node->lhs = _root;
      return ElementSet(_engine, std::move(node));
    }

    E const& engine() const noexcept {
      return *_engine;
    }

    std::shared_ptr<E const> const& engine_ptr() const noexcept {
      return _engine;
    }

    std::shared_ptr<Node const> const& root() const noexcept {
      return _root;
    }

    Membership contains(element_type const& x) const {
      return contains(*_root, x);
    }

    //! Ideal and element-list leaves in depth-first order.
    std::vector<Node const*> leaves() const {
      std::vector<Node const*> result;
      collect(*_root, result);
      return result;
    }

    //! Value of the formula given the membership of some element in each
    //! leaf, in the order of leaves().
    Membership evaluate(std::span<Membership const> leaf_values) const {
      std::size_t next = 0;
      return evaluate(*_root, leaf_values, next);
    }

    std::string describe() const {
      return describe(*_root);
    }

   private:
    ElementSet(std::shared_ptr<E const> engine, std::shared_ptr<Node const> root)
        : _engine(std::move(engine)), _root(std::move(root)) {}

    static ElementSet combine(Op op, ElementSet const& a, ElementSet const& b) {
      if (a._engine != b._engine) {
        throw Error(ErrorCode::engine_mismatch, "sets belong to different engines");
      }
      auto node = std::make_shared<Node>();
      node->op  = op;
      node->lhs = a._root;
      node->rhs = b._root;
      return ElementSet(a._engine, std::move(node));
    }

    static Membership contains(Node const& n, element_type const& x) {
      switch (n.op) {
        case Op::empty: return Membership::out;
        case Op::full: return Membership::in;
        case Op::ideal: return n.ideal->contains(x);
        case Op::elements:
          return to_membership(std::binary_search(
              n.elements.begin(), n.elements.end(), x, typename E::element_less()));
        case Op::set_union: return kleene_or(contains(*n.lhs, x), contains(*n.rhs, x));
        case Op::intersection:
          return kleene_and(contains(*n.lhs, x), contains(*n.rhs, x));
        case Op::difference:
          return kleene_and(contains(*n.lhs, x), kleene_not(contains(*n.rhs, x)));
        case Op::complement: return kleene_not(contains(*n.lhs, x));
      }
      return Membership::unknown;
    }

    static void collect(Node const& n, std::vector<Node const*>& out) {
      if (n.op == Op::ideal || n.op == Op::elements) {
        out.push_back(&n);
      }
      if (n.lhs) {
        collect(*n.lhs, out);
      }
      if (n.rhs) {
        collect(*n.rhs, out);
      }
    }

    static Membership evaluate(Node const&                 n,
                               std::span<Membership const> values,
                               std::size_t&                next) {
      switch (n.op) {
        case Op::empty: return Membership::out;
        case Op::full: return Membership::in;
        case Op::ideal:
        case Op::elements: return values[next++];
        case Op::set_union: {
          auto l = evaluate(*n.lhs, values, next);
          return kleene_or(l, evaluate(*n.rhs, values, next));
        }
        case Op::intersection: {
          auto l = evaluate(*n.lhs, values, next);
          return kleene_and(l, evaluate(*n.rhs, values, next));
        }
        case Op::difference: {
          auto l = evaluate(*n.lhs, values, next);
          return kleene_and(l, kleene_not(evaluate(*n.rhs, values, next)));
        }
        case Op::complement: return kleene_not(evaluate(*n.lhs, values, next));
      }
      return Membership::unknown;
    }

    std::string describe(Node const& n) const {
      switch (n.op) {
        case Op::empty: return "∅";
        case Op::full: return "M";
        case Op::ideal: return n.ideal->describe();
        case Op::elements: return format_elements(*_engine, n.elements);
        case Op::set_union: return "(" + describe(*n.lhs) + " ∪ " + describe(*n.rhs) + ")";
        case Op::intersection:
          return "(" + describe(*n.lhs) + " ∩ " + describe(*n.rhs) + ")";
        case Op::difference:
          return "(" + describe(*n.lhs) + " − " + describe(*n.rhs) + ")";
        case Op::complement: return "(M − " + describe(*n.lhs) + ")";
      }
      return "?";
    }

    std::shared_ptr<E const>    _engine;
    std::shared_ptr<Node const> _root;
  };

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_ELEMENT_SET_HPP_
