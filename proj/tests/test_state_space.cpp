#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "tsdp/state_space.hpp"

using namespace tsdp;

namespace {

std::set<std::string> pred_labels(const StateGraph& g, const std::string& label) {
  auto idx = g.find(label);
  REQUIRE(idx.has_value());
  std::set<std::string> out;
  for (int q : g.preds(*idx)) out.insert(g.state(q).label());
  return out;
}

std::set<std::string> labels_of(const StateGraph& g, const std::vector<int>& indices) {
  std::set<std::string> out;
  for (int s : indices) out.insert(g.state(s).label());
  return out;
}

}  // namespace

TEST_CASE("three phases, r=1, gamma=1: four states") {
  StateGraph g(3, 1, 1);
  CHECK(g.size() == 4);
  std::set<std::string> all;
  for (const auto& s : g.states()) all.insert(s.label());
  CHECK(all == std::set<std::string>{"0", "A", "B", "C"});
  CHECK(pred_labels(g, "A") == std::set<std::string>{"0", "A"});
  CHECK(pred_labels(g, "B") == std::set<std::string>{"0", "B"});
  CHECK(pred_labels(g, "0") == std::set<std::string>{"A", "B", "C"});
  CHECK(labels_of(g, g.initial_states()) == std::set<std::string>{"A", "B", "C"});
  CHECK(labels_of(g, g.final_states()) == std::set<std::string>{"0", "A", "B", "C"});
}

TEST_CASE("three phases, r=2, gamma=3: eleven states with countdown and countup") {
  StateGraph g(3, 2, 3);
  CHECK(g.size() == 11);
  CHECK(pred_labels(g, "A") == std::set<std::string>{"2A", "A"});
  CHECK(pred_labels(g, "1 0") == std::set<std::string>{"A", "B", "C"});
  CHECK(pred_labels(g, "0") == std::set<std::string>{"10"});
  CHECK(pred_labels(g, "1A") == std::set<std::string>{"0"});
  CHECK(pred_labels(g, "2A") == std::set<std::string>{"1A"});
  CHECK(labels_of(g, g.initial_states()) == std::set<std::string>{"1A", "1B", "1C"});
  CHECK(labels_of(g, g.final_states()) == std::set<std::string>{"0", "A", "B", "C"});
}

TEST_CASE("two phases, r=1, gamma=2: five states, small predecessor lists") {
  StateGraph g(2, 1, 2);
  CHECK(g.size() == 5);
  for (int s = 0; s < g.size(); ++s) {
    if (s == g.clearance_entry_index()) CHECK(g.preds(s).size() == 2);
    else CHECK(g.preds(s).size() <= 2);
  }
}

TEST_CASE("canonical ordering") {
  StateGraph g(2, 3, 4);
  std::vector<std::string> labels;
  for (const auto& s : g.states()) labels.push_back(s.label());
  CHECK(labels == std::vector<std::string>{"0", "10", "20", "1A", "2A", "3A", "A", "1B", "2B", "3B", "B"});
  CHECK(g.final_states() == std::vector<int>{6, 10, 0});
}

TEST_CASE("state count and edge count over the full parameter sweep") {
  for (int phases = 2; phases <= 8; ++phases)
    for (int gamma = 1; gamma <= 10; ++gamma)
      for (int r = 1; r <= gamma; ++r) {
        StateGraph g(phases, r, gamma);
        CAPTURE(phases);
        CAPTURE(r);
        CAPTURE(gamma);
        REQUIRE(g.size() == gamma * phases + r);
        // one pred each, |P| into the clearance entry, two into each stable phase
        CHECK(g.edge_count() == gamma * phases + r - 1 + 2 * phases);

        int self_loops = 0;
        for (int s = 0; s < g.size(); ++s)
          for (int q : g.preds(s))
            if (q == s) {
              ++self_loops;
              CHECK(g.state(s).kind == SignalState::Kind::StablePhase);
            }
        CHECK(self_loops == phases);

        const bool has_unstable_clearance = std::any_of(g.states().begin(), g.states().end(), [](auto& s) {
          return s.kind == SignalState::Kind::UnstableClearance;
        });
        const bool has_unstable_phase = std::any_of(g.states().begin(), g.states().end(), [](auto& s) {
          return s.kind == SignalState::Kind::UnstablePhase;
        });
        CHECK(has_unstable_clearance == (r >= 2));
        CHECK(has_unstable_phase == (gamma >= 2));
      }
}

TEST_CASE("every state is reachable from the initial states and has predecessors") {
  for (int phases = 2; phases <= 5; ++phases)
    for (int gamma = 1; gamma <= 6; ++gamma)
      for (int r = 1; r <= gamma; ++r) {
        StateGraph g(phases, r, gamma);
        std::vector<char> seen(g.size(), 0);
        std::vector<int> frontier = g.initial_states();
        for (int s : frontier) seen[s] = 1;
        for (int step = 0; step < g.size() && !frontier.empty(); ++step) {
          std::vector<int> next;
          for (int s : frontier)
            for (int q : g.succs(s))
              if (!seen[q]) {
                seen[q] = 1;
                next.push_back(q);
              }
          frontier = std::move(next);
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](char c) { return c == 1; }));
        for (int s = 0; s < g.size(); ++s) CHECK_FALSE(g.preds(s).empty());
      }
}

TEST_CASE("every cycle passes through a stable phase") {
  // Removing the stable phases must leave an acyclic graph.
  for (int phases = 2; phases <= 4; ++phases)
    for (int gamma = 1; gamma <= 5; ++gamma)
      for (int r = 1; r <= gamma; ++r) {
        StateGraph g(phases, r, gamma);
        std::vector<int> indegree(g.size(), 0);
        auto kept = [&](int s) { return g.state(s).kind != SignalState::Kind::StablePhase; };
        for (int s = 0; s < g.size(); ++s)
          if (kept(s))
            for (int q : g.preds(s))
              if (kept(q)) ++indegree[s];
        std::vector<int> ready;
        int remaining = 0;
        for (int s = 0; s < g.size(); ++s)
          if (kept(s)) {
            ++remaining;
            if (indegree[s] == 0) ready.push_back(s);
          }
        while (!ready.empty()) {
          const int s = ready.back();
          ready.pop_back();
          --remaining;
          for (int q : g.succs(s))
            if (kept(q) && --indegree[q] == 0) ready.push_back(q);
        }
        CHECK(remaining == 0);
      }
}

TEST_CASE("preds and succs are mutual inverses") {
  StateGraph g(4, 3, 5);
  std::multiset<std::pair<int, int>> forward, backward;
  for (int s = 0; s < g.size(); ++s) {
    for (int q : g.preds(s)) forward.insert({q, s});
    for (int q : g.succs(s)) backward.insert({s, q});
  }
  CHECK(forward == backward);
}

TEST_CASE("build is deterministic") {
  const auto inst = testing::zero_instance(9, 3, 2, 3);
  const StateGraph a = build_graph(inst), b = build_graph(inst);
  CHECK(a.states() == b.states());
  CHECK(a.to_dot() == b.to_dot());
}

TEST_CASE("serves") {
  CHECK(serves(SignalState::unstable_phase(2, 0)) == PhaseId{0});
  CHECK(serves(SignalState::stable_phase(2)) == PhaseId{2});
  CHECK_FALSE(serves(SignalState::stable_clearance()).has_value());
  CHECK_FALSE(serves(SignalState::unstable_clearance(1)).has_value());
}

TEST_CASE("labels") {
  CHECK(SignalState::unstable_phase(2, 0).label() == "2A");
  CHECK(SignalState::unstable_clearance(1).label() == "10");
  CHECK(SignalState::stable_phase(3).label() == "D");
  StateGraph g(3, 2, 3);
  CHECK(g.find("1 0") == g.find("10"));
  CHECK_FALSE(g.find("9Z").has_value());
}

TEST_CASE("dot dump lists every successor arrow") {
  StateGraph g(3, 1, 1);
  const auto dot = g.to_dot();
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("\"A\" -> \"0\"") != std::string::npos);
  CHECK(dot.find("\"0\" -> \"C\"") != std::string::npos);
  CHECK(dot.find("\"A\" -> \"A\"") != std::string::npos);
  CHECK(static_cast<int>(std::count(dot.begin(), dot.end(), '>')) == g.edge_count());
}

TEST_CASE("plan expansion and compression are inverse on legal plans") {
  StateGraph g(3, 2, 3);
  TimingPlan plan;
  plan.entries = {{PhaseId{2}, 1, 4}, {PhaseId{0}, 7, 3}, {PhaseId{2}, 12, 3}};
  const auto seq = plan_to_states(plan, g, 16);  // trailing full clearance
  REQUIRE(seq.size() == 16);
  CHECK(g.state(seq.back()).kind == SignalState::Kind::StableClearance);
  CHECK(compress_states(seq, g).entries == plan.entries);
  CHECK_THROWS_AS(plan_to_states(plan, g, 15), InvalidInput);
}
