#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gloc/errors.hpp"

namespace gloc {

using Id = std::int32_t;
inline constexpr Id kNone = -1;

std::string tuple_label(std::initializer_list<std::string_view> parts);

struct TripleHash {
  std::size_t operator()(const std::array<Id, 3>& t) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Id v : t) {
      h ^= static_cast<std::uint32_t>(v);
      h *= 1099511628211ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};
using TripleIndex = std::unordered_map<std::array<Id, 3>, Id, TripleHash>;

inline std::uint64_t pair_key(Id a, Id b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

// A finite groupoid.  Composition is kept in vertex-group normal form: every
// connected component has a root r and chosen arrows tau_x : r -> x, and the
// arrow f : a -> b is stored as the element tau_b^-1 f tau_a of Aut(r).  This
// makes comp, inv, unit and hom-set lookup O(1) with O(|arrows|) memory.
class Groupoid {
 public:
  struct Component {
    std::vector<Id> objects;
    int order = 1;               // |Aut(root)|, also the size of every hom-set
    int identity = 0;            // index of the unit in Aut(root)
    std::vector<int> mul;        // order x order
    std::vector<int> ginv;
    std::size_t offset = 0;      // into the global hom table
  };
  struct Data {
    std::vector<std::string> olab, alab;
    std::unordered_map<std::string, Id> ofind, afind;
    std::vector<Id> src, trg;
    std::vector<int> gamma;      // index of the arrow inside its hom-set
    std::vector<int> comp_of, local;
    std::vector<Component> comps;
    std::vector<Id> table;       // hom tables, component by component
  };

  Groupoid();

  std::size_t num_objects() const { return d_->olab.size(); }
  std::size_t num_arrows() const { return d_->alab.size(); }
  const std::string& object_label(Id x) const { return d_->olab[x]; }
  const std::string& arrow_label(Id a) const { return d_->alab[a]; }
  const std::vector<std::string>& object_labels() const { return d_->olab; }
  const std::vector<std::string>& arrow_labels() const { return d_->alab; }
  std::optional<Id> find_object(const std::string& s) const;
  std::optional<Id> find_arrow(const std::string& s) const;

  Id src(Id a) const { return d_->src[a]; }
  Id trg(Id a) const { return d_->trg[a]; }
  Id unit(Id x) const;
  Id inv(Id a) const;
  Id comp(Id g, Id f) const;  // g after f; requires src(g) == trg(f)
  Id comp(Id h, Id g, Id f) const { return comp(h, comp(g, f)); }

  std::span<const Id> hom(Id a, Id b) const;
  int hom_index(Id a) const { return d_->gamma[a]; }
  std::size_t hom_offset(Id a, Id b) const;
  bool connected(Id a, Id b) const { return d_->comp_of[a] == d_->comp_of[b]; }
  bool is_unit(Id a) const { return unit(src(a)) == a; }

  std::size_t out_degree(Id x) const;
  std::size_t out_pos(Id g) const;
  Id out_arrow(Id x, std::size_t pos) const;
  std::size_t in_pos(Id h) const;
  Id in_arrow(Id x, std::size_t pos) const;

  std::size_t num_components() const { return d_->comps.size(); }
  int component(Id x) const { return d_->comp_of[x]; }
  const Component& component_data(int c) const { return d_->comps[c]; }
  Id root(int c) const { return d_->comps[c].objects.front(); }

  bool same_as(const Groupoid& o) const;
  friend bool operator==(const Groupoid& a, const Groupoid& b) { return a.same_as(b); }

 private:
  explicit Groupoid(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
  friend class GroupoidBuilder;
};

// Assembles a groupoid whose composition is supplied by callbacks.  The
// callbacks are queried O(|arrows| + sum |Aut|^2) times while normalising.
class GroupoidBuilder {
 public:
  Id add_object(std::string label);
  Id add_arrow(std::string label, Id s, Id t);
  std::size_t num_objects() const { return olab_.size(); }
  std::size_t num_arrows() const { return alab_.size(); }
  Groupoid finish(const std::function<Id(Id, Id)>& comp, const std::function<Id(Id)>& inv,
                  const std::function<Id(Id)>& unit);

 private:
  std::vector<std::string> olab_, alab_;
  std::vector<Id> src_, trg_;
};

struct Functor {
  Groupoid dom, cod;
  std::vector<Id> obj, arr;
  Id ob(Id x) const { return obj[x]; }
  Id ar(Id g) const { return arr[g]; }
};

struct NatTrans {
  Functor from, to;
  std::vector<Id> at;  // component per object of the domain
  Id operator[](Id x) const { return at[x]; }
};

bool operator==(const Functor& a, const Functor& b);
bool operator==(const NatTrans& a, const NatTrans& b);

// Raw, unvalidated groupoid description (the file format).
struct RawArrow {
  std::string id, src, trg;
};
struct RawGroupoid {
  std::vector<std::string> objects;
  std::vector<RawArrow> arrows;
  std::vector<std::pair<std::string, std::string>> units;
  std::vector<std::pair<std::string, std::string>> inverse;
  std::vector<std::array<std::string, 3>> compose;  // (g, f, g after f)
};

Groupoid validate_groupoid(const RawGroupoid& raw);
RawGroupoid to_raw(const Groupoid& g);

// Structural checks.  Return a description of the first failure.
std::optional<std::string> check_groupoid(const Groupoid& g);
std::optional<std::string> check_functor(const Functor& f);
std::optional<std::string> check_nat(const NatTrans& s);
void validate_functor(const Functor& f);
void validate_nat(const NatTrans& s);

Functor make_functor(const Groupoid& dom, const Groupoid& cod, std::vector<Id> obj,
                     std::vector<Id> arr);
Functor identity_functor(const Groupoid& g);
Functor operator*(const Functor& e, const Functor& f);  // e after f
NatTrans identity_nat(const Functor& f);
NatTrans vcomp(const NatTrans& s, const NatTrans& t);   // t after s
NatTrans inverse(const NatTrans& s);
NatTrans operator*(const Functor& e, const NatTrans& s);  // e S
NatTrans operator*(const NatTrans& s, const Functor& f);  // S f
NatTrans make_nat(const Functor& from, const Functor& to, std::vector<Id> at);

// Constructors.
Groupoid empty_groupoid();
Groupoid trivial_groupoid(const std::vector<std::string>& points);
Groupoid pair_groupoid(const std::vector<std::string>& points);
// x ~ x' iff cls[x] == cls[x'].
Groupoid relation_groupoid(const std::vector<std::string>& points, const std::vector<int>& cls);
Groupoid full_subgroupoid(const Groupoid& g, const std::vector<Id>& objects, Functor* inclusion);
Functor terminal_functor(const Groupoid& g, const Groupoid& pt);

struct CharacteristicFunctor {
  Groupoid pair;
  Functor chi;
};
CharacteristicFunctor characteristic_functor(const Groupoid& g);

struct WeakEquivalenceReport {
  bool essentially_surjective = false;
  bool fully_faithful = false;
  // For each codomain object y: (x, h) with src h = y and trg h = phi(x).
  std::vector<std::optional<std::pair<Id, Id>>> ess_witness;
  // Phi^-1 indexed by dom.hom_offset(x1, x2) + cod.hom_index(h), valid when fully faithful.
  std::vector<Id> ff_inverse_table;
  std::optional<std::string> es_violation, ff_violation;
  Functor phi;

  bool is_weak_equivalence() const { return essentially_surjective && fully_faithful; }
  Id ff_inverse(Id x1, Id x2, Id h) const;
};

WeakEquivalenceReport check_weak_equivalence(const Functor& phi);
bool is_weak_equivalence(const Functor& phi);
bool is_fully_faithful(const Functor& phi);
bool check_subductive_weak_equivalence(const Functor& phi);

// Phi_phi^-1 with a report cached per call site; throws NotFullyFaithful.
class FFInverse {
 public:
  explicit FFInverse(const Functor& phi);
  Id operator()(Id x1, Id x2, Id h) const { return rep_.ff_inverse(x1, x2, h); }
  const WeakEquivalenceReport& report() const { return rep_; }

 private:
  WeakEquivalenceReport rep_;
};

struct StrictPullback {
  Groupoid groupoid;
  Functor pr1, pr2;
  std::unordered_map<std::uint64_t, Id> objects;  // pair_key(x, y)
  std::unordered_map<std::uint64_t, Id> arrows;
  Id find(Id x, Id y) const;
  Id find_arrow(Id g, Id h) const;
};
StrictPullback strict_pullback(const Functor& phi, const Functor& psi);

struct WeakPullback {
  Groupoid groupoid;
  Functor pr1, pr3;
  NatTrans pr2;  // phi pr1 => psi pr3
  Functor phi, psi;
  std::vector<std::array<Id, 3>> obj_triple, arr_triple;
  TripleIndex objects, arrows;
  Id find(Id x, Id k, Id y) const;
  Id find_arrow(Id g, Id k, Id h) const;
};
WeakPullback weak_pullback(const Functor& phi, const Functor& psi);
// theta(x) = (alpha x, T x, beta x); T : phi alpha => psi beta.
Functor weak_pullback_mediator(const WeakPullback& w, const Functor& alpha, const Functor& beta,
                               const NatTrans& t);
// (x, y) |-> (x, unit(phi x), y).
Functor strict_to_weak(const StrictPullback& s, const WeakPullback& w);

struct BaseChange {
  Groupoid groupoid;
  Functor comparison;  // to H
};
BaseChange base_change(const Groupoid& h, const std::vector<std::string>& points,
                       const std::vector<Id>& f);

// S : phi psi => phi psi'  gives the unique S' : psi => psi' with phi S' = S.
NatTrans rep_ff_factor(const Functor& phi, const Functor& psi, const Functor& psi2,
                       const NatTrans& s);
// phi subductive weak equivalence, S : psi phi => psi' phi gives S' : psi => psi'.
NatTrans coff_factor(const Functor& phi, const Functor& psi, const Functor& psi2,
                     const NatTrans& s);

}  // namespace gloc
