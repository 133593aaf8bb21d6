#pragma once

#include <functional>

#include "rsim/engine_direct.hpp"

namespace rsim {

// Reaction-level dependency edges: j is in edges[i] exactly when the
// products of reaction i intersect the reactants of reaction j. Kept for
// construction tests and analysis; the engine itself marks candidates
// through the entity index below.
struct DependencyGraph {
  std::vector<std::vector<std::uint32_t>> edges;  // sorted, per source reaction
};

DependencyGraph build_graph(const ReactionSystem& sys);

// For each entity, the sorted list of reactions consuming it as a reactant.
struct EntityReactionIndex {
  std::vector<std::vector<std::uint32_t>> by_entity;
};

EntityReactionIndex build_entity_index(const ReactionSystem& sys);

// Simulation with reaction pruning: only reactions whose reactants were just
// produced, or injected by the context, are probed at each step. The carried
// candidate set starts all-ones (the first input state is unconstrained) and
// always over-approximates the enabled set.
class GraphEngine final : public Engine {
 public:
  // Called once per step after candidate marking: the step index (0-based
  // context position), the input state d ∪ c, the candidate set that was
  // probed, and how many reactions were tested and fired.
  using StepObserver = std::function<void(std::size_t step, const State& input,
                                          const BitVec& candidates, std::size_t tested,
                                          std::size_t fired)>;

  explicit GraphEngine(const ReactionSystem& sys, const kernels::Table* kernels = nullptr);

  std::string_view name() const override { return "graph"; }
  std::size_t entity_count() const override { return n_entities_; }
  void reset() override;
  void step(const State& current, const State& context, State& out) override;

  std::size_t reaction_count() const { return compiled_.size(); }
  const BitVec& candidates() const { return candidates_; }
  const EntityReactionIndex& entity_index() const { return index_; }
  std::span<const CompiledReaction> compiled() const { return compiled_; }

  void set_step_observer(StepObserver observer) { observer_ = std::move(observer); }

 private:
  std::vector<CompiledReaction> compiled_;
  EntityReactionIndex index_;
  std::size_t n_entities_;
  const kernels::Table* kernels_;
  BitVec candidates_;
  State union_buf_;
  std::size_t step_index_ = 0;
  StepObserver observer_;
};

}  // namespace rsim
