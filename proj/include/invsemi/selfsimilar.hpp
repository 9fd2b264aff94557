#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace invsemi::selfsimilar {

/// Letter (a, i) of an alphabet A x N. copy is 0 for letters of a base that
/// is not inflated.
struct Letter {
  std::uint32_t base = 0;
  std::uint32_t copy = 0;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct TrivialElem {
  friend auto operator<=>(const TrivialElem&, const TrivialElem&) = default;
};

/// Finitely supported element of the direct sum of C_p x C_p over primes p:
/// sorted by prime, zero components omitted.
struct PrimeVec {
  struct Component {
    std::uint32_t p, x, y;
    friend auto operator<=>(const Component&, const Component&) = default;
  };
  std::vector<Component> comps;
  friend auto operator<=>(const PrimeVec&, const PrimeVec&) = default;
};

/// Word in automaton states: k + 1 stands for state k, -(k + 1) for its inverse.
struct AutomatonWord {
  std::vector<std::int32_t> syms;
  friend auto operator<=>(const AutomatonWord&, const AutomatonWord&) = default;
};

using GroupElem = std::variant<TrivialElem, PrimeVec, AutomatonWord>;

enum class Tri { No, Yes, Unknown };
std::string to_string(Tri t);

/// A self-similar action of a group on words over a finite base alphabet,
/// some of whose letters may be inflated to countably many copies.
class SelfSimilarAction {
 public:
  virtual ~SelfSimilarAction() = default;

  virtual std::string kind() const = 0;
  virtual std::size_t alphabet_size() const = 0;
  virtual std::string letter_name(std::uint32_t base) const = 0;
  /// Whether base letter a stands for the infinite class {(a, i) : i in N}.
  virtual bool inflated(std::uint32_t base) const = 0;

  virtual std::uint32_t act_base(const GroupElem& g, std::uint32_t base) const = 0;
  virtual GroupElem restrict_base(const GroupElem& g, std::uint32_t base) const = 0;
  virtual GroupElem multiply(const GroupElem& g, const GroupElem& h) const = 0;
  virtual GroupElem inverse(const GroupElem& g) const = 0;
  virtual GroupElem identity() const = 0;
  /// A normal form; equal normal forms mean equal elements.
  virtual GroupElem canonical(const GroupElem& g) const { return g; }
  /// Identity test. Exact actions never return Unknown.
  virtual Tri is_identity(const GroupElem& g, std::size_t depth) const = 0;
  virtual bool exact() const = 0;
  virtual std::vector<GroupElem> generators() const = 0;
  virtual std::string format(const GroupElem& g) const = 0;
  /// Faithfulness of the action on words is part of each construction.
  virtual bool faithful() const { return true; }

  Letter act(const GroupElem& g, Letter x) const { return {act_base(g, x.base), x.copy}; }
  GroupElem restrict(const GroupElem& g, Letter x) const { return restrict_base(g, x.base); }
  Tri equal(const GroupElem& g, const GroupElem& h, std::size_t depth) const;
  bool all_inflated() const;
  std::string format_letter(Letter x) const;
  std::string format_word(const Word& w) const;
};

using ActionPtr = std::shared_ptr<const SelfSimilarAction>;

/// g(w), letter by letter through the sections.
Word act_word(const SelfSimilarAction& A, GroupElem g, const Word& w);
/// g|_w.
GroupElem restrict_word(const SelfSimilarAction& A, GroupElem g, const Word& w);

/// The trivial group acting on the alphabet; its hull is the polycyclic monoid.
class TrivialAction : public SelfSimilarAction {
 public:
  TrivialAction(std::vector<std::string> letters, std::vector<bool> inflated);
  std::string kind() const override { return "trivial"; }
  std::size_t alphabet_size() const override { return letters_.size(); }
  std::string letter_name(std::uint32_t b) const override { return letters_.at(b); }
  bool inflated(std::uint32_t b) const override { return inflated_.at(b); }
  std::uint32_t act_base(const GroupElem&, std::uint32_t b) const override { return b; }
  GroupElem restrict_base(const GroupElem&, std::uint32_t) const override { return TrivialElem{}; }
  GroupElem multiply(const GroupElem&, const GroupElem&) const override { return TrivialElem{}; }
  GroupElem inverse(const GroupElem&) const override { return TrivialElem{}; }
  GroupElem identity() const override { return TrivialElem{}; }
  Tri is_identity(const GroupElem&, std::size_t) const override { return Tri::Yes; }
  bool exact() const override { return true; }
  std::vector<GroupElem> generators() const override { return {}; }
  std::string format(const GroupElem&) const override { return "1"; }

 private:
  std::vector<std::string> letters_;
  std::vector<bool> inflated_;
};

/// The group sum of C_p x C_p over p in P acting on A = disjoint union of the
/// A_p, where A_p lists the cosets of the p + 1 index-p subgroups of
/// C_p x C_p. g moves a letter of A_p by its p-component and g|_a drops the
/// p-component. Letters of A_p are (line l, value t) with l in 0..p and t in
/// F_p; line l < p is the functional x + l y, line p is y.
class PrimeSetAction : public SelfSimilarAction {
 public:
  /// Throws InvalidArgument for an empty or non-prime set, CapExceeded when
  /// the alphabet would exceed max_letters.
  explicit PrimeSetAction(std::vector<std::uint32_t> primes, std::size_t max_letters = 4096);

  std::string kind() const override { return "prime-set"; }
  std::size_t alphabet_size() const override { return letters_.size(); }
  std::string letter_name(std::uint32_t b) const override;
  bool inflated(std::uint32_t) const override { return false; }
  std::uint32_t act_base(const GroupElem& g, std::uint32_t b) const override;
  GroupElem restrict_base(const GroupElem& g, std::uint32_t b) const override;
  GroupElem multiply(const GroupElem& g, const GroupElem& h) const override;
  GroupElem inverse(const GroupElem& g) const override;
  GroupElem identity() const override { return PrimeVec{}; }
  Tri is_identity(const GroupElem& g, std::size_t) const override;
  bool exact() const override { return true; }
  std::vector<GroupElem> generators() const override;
  std::string format(const GroupElem& g) const override;

  const std::vector<std::uint32_t>& primes() const { return primes_; }
  std::uint32_t prime_of(std::uint32_t base) const { return letters_.at(base).p; }
  /// Base letters of A_p, in index order.
  std::vector<std::uint32_t> letters_of(std::uint32_t p) const;
  /// All elements of the subgroup C_p x C_p.
  std::vector<PrimeVec> component_group(std::uint32_t p) const;
  /// All elements of G (the product of the p^2).
  std::vector<PrimeVec> all_elements() const;
  /// The element with p-component (x, y) and nothing else.
  static PrimeVec component(std::uint32_t p, std::uint32_t x, std::uint32_t y);

 private:
  struct L {
    std::uint32_t p, line, t;
  };
  std::vector<std::uint32_t> primes_;
  std::vector<L> letters_;
};

/// An automaton group: each state has a permutation of the base alphabet and
/// a section word per letter. Involution states are their own inverses.
/// Identity is decided by exploring sections coinductively up to a depth
/// bound.
class AutomatonAction : public SelfSimilarAction {
 public:
  struct State {
    std::string name;
    std::vector<std::uint32_t> perm;
    std::vector<AutomatonWord> sections;
    bool involution = false;
  };

  /// Throws InvalidArgument on malformed tables. `involutions` marks every
  /// state as an involution.
  AutomatonAction(std::vector<std::string> letters, std::vector<bool> inflated,
                  std::vector<State> states, bool involutions = false);

  std::string kind() const override { return "automaton"; }
  std::size_t alphabet_size() const override { return letters_.size(); }
  std::string letter_name(std::uint32_t b) const override { return letters_.at(b); }
  bool inflated(std::uint32_t b) const override { return inflated_.at(b); }
  std::uint32_t act_base(const GroupElem& g, std::uint32_t b) const override;
  GroupElem restrict_base(const GroupElem& g, std::uint32_t b) const override;
  GroupElem multiply(const GroupElem& g, const GroupElem& h) const override;
  GroupElem inverse(const GroupElem& g) const override;
  GroupElem identity() const override { return AutomatonWord{}; }
  GroupElem canonical(const GroupElem& g) const override;
  Tri is_identity(const GroupElem& g, std::size_t depth) const override;
  bool exact() const override { return false; }
  std::vector<GroupElem> generators() const override;
  std::string format(const GroupElem& g) const override;

  const std::vector<State>& states() const { return states_; }
  const std::vector<std::string>& letters() const { return letters_; }
  std::optional<std::int32_t> state_index(const std::string& name) const;
  /// Parses "a b^-1 c" (space separated state names, "" for the identity).
  AutomatonWord parse_word(const std::string& text) const;
  /// Same automaton with every base letter inflated.
  std::shared_ptr<AutomatonAction> inflated_copy() const;
  /// Same automaton with extra states appended.
  std::shared_ptr<AutomatonAction> with_states(std::vector<State> extra) const;

 private:
  const AutomatonWord& word(const GroupElem& g) const;
  std::vector<std::string> letters_;
  std::vector<bool> inflated_;
  std::vector<State> states_;
  std::vector<std::vector<std::uint32_t>> inverse_perm_;
};

/// Countable inflation: every base letter a becomes the class {(a, i)}; act
/// and restrict ignore the copy index.
class InflatedAction : public SelfSimilarAction {
 public:
  explicit InflatedAction(ActionPtr base);
  std::string kind() const override { return "inflation"; }
  std::size_t alphabet_size() const override { return base_->alphabet_size(); }
  std::string letter_name(std::uint32_t b) const override { return base_->letter_name(b); }
  bool inflated(std::uint32_t) const override { return true; }
  std::uint32_t act_base(const GroupElem& g, std::uint32_t b) const override { return base_->act_base(g, b); }
  GroupElem restrict_base(const GroupElem& g, std::uint32_t b) const override {
    return base_->restrict_base(g, b);
  }
  GroupElem multiply(const GroupElem& g, const GroupElem& h) const override { return base_->multiply(g, h); }
  GroupElem inverse(const GroupElem& g) const override { return base_->inverse(g); }
  GroupElem identity() const override { return base_->identity(); }
  GroupElem canonical(const GroupElem& g) const override { return base_->canonical(g); }
  Tri is_identity(const GroupElem& g, std::size_t depth) const override {
    return base_->is_identity(g, depth);
  }
  bool exact() const override { return base_->exact(); }
  std::vector<GroupElem> generators() const override { return base_->generators(); }
  std::string format(const GroupElem& g) const override { return base_->format(g); }
  const ActionPtr& base() const { return base_; }

 private:
  ActionPtr base_;
};

/// Throws InvalidArgument when the base alphabet has fewer than 2 letters.
ActionPtr build_countable_inflation(ActionPtr base);
/// Inflated prime-set construction. Throws InvalidArgument on an empty set.
ActionPtr build_prime_construction(const std::vector<std::uint32_t>& primes,
                                   std::size_t max_letters = 4096);
/// C2 = {1, a} on {x, y} u Z: a swaps x and y, fixes the inflated letter z,
/// and all its sections are trivial.
std::shared_ptr<const AutomatonAction> xz_example();
/// The Grigorchuk automaton on {0, 1}: a swaps, b = (a, c), c = (a, d), d = (1, b).
std::shared_ptr<const AutomatonAction> grigorchuk();

/// Minimal words w (no proper prefix qualifies) with g(w) = w and g|_w = 1,
/// up to the given length. Inflated letters are probed by copy 0 and stand
/// for their whole class.
struct StronglyFixed {
  std::vector<Word> minimal;
  /// Words of maximal length that are fixed but not yet strongly fixed.
  std::vector<Word> open;
  /// Some identity test along the way returned Unknown.
  bool uncertain = false;
};
StronglyFixed strongly_fixed(const SelfSimilarAction& A, const GroupElem& g, std::size_t depth);

enum class HausdorffVerdict { FinitelyGenerated, Growing, ExactNo };
std::string to_string(HausdorffVerdict v);

struct HausdorffEntry {
  GroupElem generator;
  HausdorffVerdict verdict;
  std::vector<std::size_t> minimal_by_depth;
};

/// Per generator (the identity when there are none): whether the strongly
/// fixed words are generated by finitely many.
std::vector<HausdorffEntry> is_hausdorff_up_to_depth(const SelfSimilarAction& A, std::size_t depth);

struct EffectivenessResult {
  bool effective = false;
  std::optional<GroupElem> witness;
  std::string method;
};

/// No nontrivial g strongly fixes a cofinite set of letters. Exact for fully
/// inflated actions and finite groups; otherwise searches words up to
/// `depth` and throws Undecidable when nothing is found.
EffectivenessResult effectiveness_criterion(const SelfSimilarAction& A, std::size_t depth = 4);

}  // namespace invsemi::selfsimilar
