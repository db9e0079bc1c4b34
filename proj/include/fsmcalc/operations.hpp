#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fsmcalc/network.hpp"

namespace fsmcalc {

enum class Side { Upper, Lower };
enum class SideSelect { Upper, Lower, Both };
enum class Projection { Upper, Lower, Pairs };
enum class ClosureKind { Star, Plus };

using Word = std::vector<SymbolId>;
using PairWord = std::vector<Label>;

// Constructors.

/// Accepts exactly the empty string.
Network epsilon_network(const SymbolTablePtr &table);
/// Accepts nothing.
Network empty_network(const SymbolTablePtr &table);
/// Two-state network for the single pair `upper:lower`.
Network atom(const SymbolTablePtr &table, SymbolId upper, SymbolId lower);
/// Identity acceptor for one symbol sequence.
Network string_network(const SymbolTablePtr &table, std::span<const SymbolId> word);
/// Acceptor for a finite set of symbol sequences, built as a trie.
Network words_network(const SymbolTablePtr &table, const std::vector<Word> &words);

// Regular operations. All results are normalized.

Network concatenate(const Network &a, const Network &b);
Network unite(const Network &a, const Network &b);
Network intersect(const Network &a, const Network &b);
Network subtract(const Network &a, const Network &b);
Network closure(const Network &a, ClosureKind kind);
inline Network star(const Network &a) { return closure(a, ClosureKind::Star); }
inline Network plus(const Network &a) { return closure(a, ClosureKind::Plus); }
Network repeat(const Network &a, std::size_t n);
Network reverse(const Network &a);

/// Pairs every string of `a` with every string of `b`. The shorter side is
/// padded with trailing epsilons.
Network crossproduct(const Network &a, const Network &b);

/// Relation composition: `a`'s lower side is matched against `b`'s upper side.
Network compose(const Network &a, const Network &b);

Network project(const Network &a, Side side);

/// Replaces `from` on the selected side(s) by the sequence `to`. An empty
/// `to` deletes the symbol.
Network substitute_symbol(const Network &a, SymbolId from,
                          std::span<const SymbolId> to, SideSelect side);

/// Epsilon-free, deterministic and minimal over pair labels, trim, with
/// states numbered breadth-first from 0 and arcs sorted by print name.
/// Idempotent.
Network normalize(const Network &a);

/// True when the network has no accepting path.
bool is_empty(const Network &a);

/// True when the normalized network has a cycle.
bool is_cyclic(const Network &a);

// Enumeration and comparison.

/// All accepted words on one side with at most `max_len` symbols.
std::set<Word> enumerate(const Network &a, std::size_t max_len, Side side);
/// All accepted label sequences with at most `max_len` labels.
std::set<PairWord> enumerate_pairs(const Network &a, std::size_t max_len);

/// String view of `enumerate`. For Upper/Lower, print names are
/// concatenated; for Pairs, labels are written in `u:l` notation (identity
/// pairs as one symbol, epsilon as `0`) separated by single spaces.
std::set<std::string> enumerate_words(const Network &a, std::size_t max_len,
                                      Projection projection);

/// Same relation, decided by comparing normalized forms over pair labels.
bool equivalent(const Network &a, const Network &b);

/// Concatenates print names.
std::string spell(const SymbolTable &table, std::span<const SymbolId> word);
/// `u:l` notation, space separated.
std::string spell_pairs(const SymbolTable &table, std::span<const Label> word);

} // namespace fsmcalc
