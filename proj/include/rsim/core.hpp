#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rsim/bitvec.hpp"

namespace rsim {

// Index into the background set; dense in [0, |S|), assigned once at system
// construction and stable afterwards.
using EntityId = std::uint32_t;

// Strict mode requires every reaction to have non-empty reactants, inhibitors
// and products. The relaxed mode tolerates empty inhibitor sets, which many
// models converted from other formalisms have.
enum class Strictness { Strict, AllowEmptyInhibitors };

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  std::size_t line = 0;
  std::size_t column = 0;
};

struct EngineMismatchError : Error {
  EngineMismatchError(std::string a, std::string b, std::size_t divergent_step)
      : Error("engines '" + a + "' and '" + b + "' diverge at step " +
              std::to_string(divergent_step)),
        engine_a(std::move(a)),
        engine_b(std::move(b)),
        step(divergent_step) {}
  std::string engine_a, engine_b;
  std::size_t step;
};

// A reactant/inhibitor/product triple over entity indices. Each set is kept
// sorted and duplicate-free; reactants and inhibitors must be disjoint.
// Non-emptiness and index range are checked by the owning ReactionSystem.
class Reaction {
 public:
  Reaction(std::vector<EntityId> reactants, std::vector<EntityId> inhibitors,
           std::vector<EntityId> products);

  std::span<const EntityId> reactants() const { return reactants_; }
  std::span<const EntityId> inhibitors() const { return inhibitors_; }
  std::span<const EntityId> products() const { return products_; }

  friend bool operator==(const Reaction&, const Reaction&) = default;

 private:
  std::vector<EntityId> reactants_, inhibitors_, products_;
};

// A background set of named entities plus an ordered list of reactions over
// it. Immutable after construction and safe to share read-only.
class ReactionSystem {
 public:
  ReactionSystem(std::vector<std::string> entity_names, std::vector<Reaction> reactions,
                 Strictness mode = Strictness::Strict);

  std::size_t entity_count() const { return names_.size(); }
  const std::vector<std::string>& entity_names() const { return names_; }
  const std::string& name_of(EntityId id) const { return names_[id]; }
  std::optional<EntityId> find_entity(std::string_view name) const;

  std::span<const Reaction> reactions() const { return reactions_; }
  std::size_t reaction_count() const { return reactions_.size(); }

  friend bool operator==(const ReactionSystem& a, const ReactionSystem& b) {
    return a.names_ == b.names_ && a.reactions_ == b.reactions_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Reaction> reactions_;
  std::unordered_map<std::string, EntityId> index_;
};

// Externally supplied entity sets, one per simulation step.
struct ContextSequence {
  std::vector<State> steps;

  std::size_t size() const { return steps.size(); }
  const State& operator[](std::size_t i) const { return steps[i]; }

  friend bool operator==(const ContextSequence&, const ContextSequence&) = default;
};

// The produced state sequence: states[0] is the empty state, states[i] the
// result of step i.
struct Trajectory {
  std::vector<State> states;

  std::size_t size() const { return states.size(); }
  const State& operator[](std::size_t i) const { return states[i]; }

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

// Behavioral contract every simulation engine implements. Engines carry
// precomputed read-only structures plus per-run scratch, so one engine
// instance serves one running simulation at a time; concurrent runs each use
// their own instance.
class Engine {
 public:
  virtual ~Engine() = default;

  virtual std::string_view name() const = 0;
  virtual std::size_t entity_count() const = 0;

  // Clears any state carried across steps; run() calls this before stepping.
  virtual void reset() {}

  // out = result of one step from `current` with context `context`.
  virtual void step(const State& current, const State& context, State& out) = 0;
};

// Reference semantics, straight from the definitions. Engines are tested
// against these.
bool enabled(const Reaction& r, const State& t);
State result(const ReactionSystem& sys, const State& t);
State step(const ReactionSystem& sys, const State& current, const State& context);

// Trivial engine wrapping the reference semantics.
class ReferenceEngine final : public Engine {
 public:
  explicit ReferenceEngine(const ReactionSystem& sys) : sys_(sys) {}

  std::string_view name() const override { return "reference"; }
  std::size_t entity_count() const override { return sys_.entity_count(); }
  void step(const State& current, const State& context, State& out) override;

 private:
  ReactionSystem sys_;
  State union_buf_;
};

// Runs the interactive process: states[0] = empty, one step per context
// entry. Rejects context states whose width differs from the engine's.
Trajectory run(Engine& engine, const ContextSequence& ctx);

// Same, but for exactly `steps` steps: a shorter context is padded with
// empty states, a longer one is truncated.
Trajectory run(Engine& engine, const ContextSequence& ctx, std::size_t steps);

}  // namespace rsim
