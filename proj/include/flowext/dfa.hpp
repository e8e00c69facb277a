#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "flowext/errors.hpp"

namespace flowext {

// Deterministic finite automaton over {0, 1}. States are 0..size()-1; names
// are kept for interchange only.
class Dfa {
 public:
  using Transition = std::array<std::size_t, 2>;

  Dfa(std::vector<std::string> names, std::size_t initial, std::vector<bool> accepting,
      std::vector<Transition> transitions)
      : names_(std::move(names)),
        initial_(initial),
        accepting_(std::move(accepting)),
        transitions_(std::move(transitions)) {
    const std::size_t q = names_.size();
    if (q == 0) throw InputError("automaton needs at least one state");
    if (initial_ >= q) throw InputError("initial state out of range");
    if (accepting_.size() != q || transitions_.size() != q) {
      throw InputError("accepting flags and transition rows must cover every state");
    }
    for (const Transition& row : transitions_) {
      if (row[0] >= q || row[1] >= q) throw InputError("transition target out of range");
    }
  }

  // States named "q0", "q1", ...
  Dfa(std::size_t initial, std::vector<bool> accepting, std::vector<Transition> transitions)
      : Dfa(default_names(accepting.size()), initial, accepting, std::move(transitions)) {}

  std::size_t size() const { return names_.size(); }
  std::size_t initial() const { return initial_; }
  bool is_accepting(std::size_t q) const { return accepting_[q]; }
  std::size_t next(std::size_t q, int symbol) const { return transitions_[q][symbol]; }
  const std::vector<std::string>& names() const { return names_; }

  template <class Word>
  bool accepts(const Word& word) const {
    std::size_t q = initial_;
    for (auto symbol : word) q = next(q, symbol ? 1 : 0);
    return accepting_[q];
  }

  // Words with an even number of ones.
  static Dfa even_parity() { return Dfa(0, {true, false}, {{{0, 1}}, {{1, 0}}}); }

  // One accepting state looping on both symbols.
  static Dfa all_accepting() { return Dfa(0, {true}, {{{0, 0}}}); }

 private:
  static std::vector<std::string> default_names(std::size_t q) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < q; ++i) names.push_back("q" + std::to_string(i));
    return names;
  }

  std::vector<std::string> names_;
  std::size_t initial_;
  std::vector<bool> accepting_;
  std::vector<Transition> transitions_;
};

}  // namespace flowext
