//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "molga/smiles.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string_view>
#include <utility>

#include "molga/canonical.h"
#include "writer_internal.h"

namespace molga {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_periodic_symbol(std::string_view sym) {
  static constexpr std::array<std::string_view, 118> kSymbols = {
      "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg", "Al", "Si", "P",
      "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn",
      "Ga", "Ge", "As", "Se", "Br", "Kr", "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru", "Rh",
      "Pd", "Ag", "Cd", "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd",
      "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu", "Hf", "Ta", "W",  "Re",
      "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi", "Po", "At", "Rn", "Fr", "Ra", "Ac", "Th",
      "Pa", "U",  "Np", "Pu", "Am", "Cm", "Bk", "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db",
      "Sg", "Bh", "Hs", "Mt", "Ds", "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og"};
  return std::find(kSymbols.begin(), kSymbols.end(), sym) != kSymbols.end();
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  MolGraph parse() {
    if (s_.empty()) fail(ErrorCode::kSyntaxError, 0, "empty SMILES");
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '(') {
        open_branch();
      } else if (c == ')') {
        close_branch();
      } else if (c == '-' || c == '=' || c == '#' || c == ':') {
        if (bond_symbol_) fail(ErrorCode::kSyntaxError, pos_, "two bond symbols in a row");
        bond_symbol_ = c;
        bond_offset_ = pos_++;
      } else if (is_digit(c) || c == '%') {
        ring_closure();
      } else if (c == '[') {
        add_atom(bracket_atom());
      } else if (c == '/' || c == '\\') {
        fail(ErrorCode::kUnsupportedFeature, pos_, "bond stereochemistry is not supported");
      } else if (c == '.') {
        fail(ErrorCode::kUnsupportedFeature, pos_, "disconnected SMILES ('.') is not supported");
      } else if (c == '*') {
        fail(ErrorCode::kUnsupportedFeature, pos_, "wildcard atoms are not supported");
      } else if (c == '$') {
        fail(ErrorCode::kUnsupportedFeature, pos_, "quadruple bonds are not supported");
      } else if (c == '@') {
        fail(ErrorCode::kUnsupportedFeature, pos_, "chirality is not supported");
      } else {
        add_atom(organic_atom());
      }
    }
    if (bond_symbol_) fail(ErrorCode::kSyntaxError, bond_offset_, "dangling bond");
    if (!branches_.empty()) fail(ErrorCode::kSyntaxError, s_.size(), "unclosed branch");
    if (!open_rings_.empty()) {
      fail(ErrorCode::kSyntaxError, open_rings_.begin()->second.offset,
           "unclosed ring bond " + std::to_string(open_rings_.begin()->first));
    }
    if (atoms_.empty()) fail(ErrorCode::kSyntaxError, 0, "no atoms");

    MolGraph raw(std::move(atoms_), std::move(bonds_));
    MolGraph kekule = [&] {
      try {
        return kekulize(raw);
      } catch (const Error &e) {
        throw SmilesError(e.code(), 0, e.what());
      }
    }();
    MolGraph g = normalize_hydrogens(kekule);
    for (int i = 0; i < g.atom_count(); ++i) {
      if (!atom_valence_ok(g, i)) {
        fail(ErrorCode::kValenceViolation, atom_offsets_[i],
             "valence violation at " + std::string(symbol(g.atom(i).element)));
      }
    }
    return g;
  }

 private:
  struct OpenRing {
    int atom;
    std::optional<char> symbol;
    std::size_t offset;
  };

  [[noreturn]] void fail(ErrorCode code, std::size_t offset, const std::string &why) {
    throw SmilesError(code, offset, why + " at offset " + std::to_string(offset));
  }

  void open_branch() {
    if (prev_ < 0) fail(ErrorCode::kSyntaxError, pos_, "branch without a preceding atom");
    if (bond_symbol_) fail(ErrorCode::kSyntaxError, pos_, "bond symbol before branch");
    if (!branches_.empty() && atoms_.size() == branches_.back().second) {
      fail(ErrorCode::kSyntaxError, pos_, "branch at the start of a branch");
    }
    branches_.push_back({prev_, atoms_.size()});
    ++pos_;
  }

  void close_branch() {
    if (branches_.empty()) fail(ErrorCode::kSyntaxError, pos_, "unbalanced ')'");
    if (bond_symbol_ || atoms_.size() == branches_.back().second) {
      fail(ErrorCode::kSyntaxError, pos_, "empty branch");
    }
    prev_ = branches_.back().first;
    branches_.pop_back();
    ++pos_;
  }

  void ring_closure() {
    const std::size_t start = pos_;
    if (prev_ < 0) fail(ErrorCode::kSyntaxError, pos_, "ring bond without a preceding atom");
    if (!branches_.empty() && atoms_.size() == branches_.back().second) {
      fail(ErrorCode::kSyntaxError, pos_, "ring bond at the start of a branch");
    }
    int id = 0;
    if (s_[pos_] == '%') {
      if (pos_ + 2 >= s_.size() || !is_digit(s_[pos_ + 1]) || !is_digit(s_[pos_ + 2])) {
        fail(ErrorCode::kSyntaxError, pos_, "'%' must be followed by two digits");
      }
      id = (s_[pos_ + 1] - '0') * 10 + (s_[pos_ + 2] - '0');
      pos_ += 3;
    } else {
      id = s_[pos_++] - '0';
    }
    const std::optional<char> symbol = bond_symbol_;
    bond_symbol_.reset();
    auto it = open_rings_.find(id);
    if (it == open_rings_.end()) {
      open_rings_[id] = {prev_, symbol, start};
      return;
    }
    const OpenRing open = it->second;
    open_rings_.erase(it);
    if (open.atom == prev_) fail(ErrorCode::kSyntaxError, start, "ring bond to itself");
    std::optional<char> merged = open.symbol;
    if (symbol) {
      if (merged && *merged != *symbol) {
        fail(ErrorCode::kSyntaxError, start, "conflicting ring bond orders");
      }
      merged = symbol;
    }
    connect(open.atom, prev_, merged, start);
  }

  void connect(int a, int b, std::optional<char> symbol, std::size_t offset) {
    for (const Bond &existing : bonds_) {
      if ((existing.begin == a && existing.end == b) ||
          (existing.begin == b && existing.end == a)) {
        fail(ErrorCode::kSyntaxError, offset, "duplicate bond");
      }
    }
    Bond bond{a, b, BondOrder::kSingle, false};
    const bool both_aromatic = atoms_[a].aromatic && atoms_[b].aromatic;
    if (!symbol) {
      bond.aromatic = both_aromatic;
    } else {
      switch (*symbol) {
        case '-':
          break;
        case '=':
          bond.order = BondOrder::kDouble;
          break;
        case '#':
          bond.order = BondOrder::kTriple;
          break;
        case ':':
          if (!both_aromatic) {
            fail(ErrorCode::kSyntaxError, offset, "aromatic bond between non-aromatic atoms");
          }
          bond.aromatic = true;
          break;
      }
    }
    bonds_.push_back(bond);
  }

  void add_atom(Atom atom) {
    if (static_cast<int>(atoms_.size()) >= kMaxHeavyAtoms) {
      fail(ErrorCode::kUnsupportedFeature, atom_start_,
           "more than " + std::to_string(kMaxHeavyAtoms) + " heavy atoms");
    }
    const int index = static_cast<int>(atoms_.size());
    atoms_.push_back(atom);
    atom_offsets_.push_back(atom_start_);
    if (prev_ >= 0) {
      connect(prev_, index, bond_symbol_, bond_symbol_ ? bond_offset_ : atom_start_);
    } else if (bond_symbol_) {
      fail(ErrorCode::kSyntaxError, bond_offset_, "bond without a preceding atom");
    }
    bond_symbol_.reset();
    prev_ = index;
  }

  Atom organic_atom() {
    atom_start_ = pos_;
    const char c = s_[pos_];
    Atom a;
    auto take = [&](Element e, std::size_t len, bool aromatic) {
      a.element = e;
      a.aromatic = aromatic;
      pos_ += len;
      return a;
    };
    const char next = pos_ + 1 < s_.size() ? s_[pos_ + 1] : '\0';
    switch (c) {
      case 'B':
        return next == 'r' ? take(Element::kBr, 2, false) : take(Element::kB, 1, false);
      case 'C':
        return next == 'l' ? take(Element::kCl, 2, false) : take(Element::kC, 1, false);
      case 'N':
        return take(Element::kN, 1, false);
      case 'O':
        return take(Element::kO, 1, false);
      case 'P':
        return take(Element::kP, 1, false);
      case 'S':
        return take(Element::kS, 1, false);
      case 'F':
        return take(Element::kF, 1, false);
      case 'I':
        return take(Element::kI, 1, false);
      case 'b':
        return take(Element::kB, 1, true);
      case 'c':
        return take(Element::kC, 1, true);
      case 'n':
        return take(Element::kN, 1, true);
      case 'o':
        return take(Element::kO, 1, true);
      case 'p':
        return take(Element::kP, 1, true);
      case 's':
        return take(Element::kS, 1, true);
      default:
        break;
    }
    fail(ErrorCode::kSyntaxError, pos_, std::string("unexpected character '") + c + "'");
  }

  Atom bracket_atom() {
    atom_start_ = pos_;
    ++pos_;  // '['
    auto peek = [&]() { return pos_ < s_.size() ? s_[pos_] : '\0'; };
    if (is_digit(peek())) fail(ErrorCode::kUnsupportedFeature, pos_, "isotopes are not supported");

    Atom a;
    a.bracket = true;
    const char c = peek();
    if (std::isupper(static_cast<unsigned char>(c))) {
      std::string sym(1, c);
      ++pos_;
      if (std::islower(static_cast<unsigned char>(peek()))) {
        const std::string two = sym + peek();
        if (is_periodic_symbol(two)) {
          sym = two;
          ++pos_;
        }
      }
      auto e = element_from_symbol(sym);
      if (!e) {
        if (is_periodic_symbol(sym)) {
          fail(ErrorCode::kUnsupportedFeature, atom_start_, "element " + sym + " is not supported");
        }
        fail(ErrorCode::kSyntaxError, atom_start_, "unknown element " + sym);
      }
      a.element = *e;
    } else if (std::islower(static_cast<unsigned char>(c))) {
      const char d = pos_ + 1 < s_.size() ? s_[pos_ + 1] : '\0';
      if ((c == 's' && d == 'e') || (c == 'a' && d == 's') || (c == 't' && d == 'e')) {
        fail(ErrorCode::kUnsupportedFeature, atom_start_, "aromatic element not supported");
      }
      static const std::map<char, Element> aromatic = {
          {'b', Element::kB}, {'c', Element::kC}, {'n', Element::kN},
          {'o', Element::kO}, {'p', Element::kP}, {'s', Element::kS}};
      auto it = aromatic.find(c);
      if (it == aromatic.end()) fail(ErrorCode::kSyntaxError, pos_, "bad bracket atom symbol");
      a.element = it->second;
      a.aromatic = true;
      ++pos_;
    } else if (c == '*') {
      fail(ErrorCode::kUnsupportedFeature, pos_, "wildcard atoms are not supported");
    } else {
      fail(ErrorCode::kSyntaxError, pos_, "bad bracket atom symbol");
    }

    if (peek() == '@') fail(ErrorCode::kUnsupportedFeature, pos_, "chirality is not supported");
    if (peek() == 'H') {
      ++pos_;
      a.explicit_h = 1;
      if (is_digit(peek())) {
        a.explicit_h = peek() - '0';
        ++pos_;
        if (is_digit(peek())) fail(ErrorCode::kSyntaxError, pos_, "hydrogen count too large");
      }
    }
    if (peek() == '+' || peek() == '-') {
      const char sign = peek();
      const int unit = sign == '+' ? 1 : -1;
      ++pos_;
      int magnitude = 1;
      if (is_digit(peek())) {
        magnitude = peek() - '0';
        ++pos_;
        if (is_digit(peek())) fail(ErrorCode::kSyntaxError, pos_, "charge too large");
      } else {
        while (peek() == sign) {
          ++magnitude;
          ++pos_;
        }
      }
      a.formal_charge = unit * magnitude;
      if (a.formal_charge < kMinCharge || a.formal_charge > kMaxCharge) {
        fail(ErrorCode::kUnsupportedFeature, atom_start_, "formal charge outside [-2, 2]");
      }
    }
    if (peek() == ':') fail(ErrorCode::kUnsupportedFeature, pos_, "atom classes are not supported");
    if (peek() == '@') fail(ErrorCode::kUnsupportedFeature, pos_, "chirality is not supported");
    if (pos_ >= s_.size()) fail(ErrorCode::kSyntaxError, atom_start_, "unterminated bracket atom");
    if (peek() != ']') fail(ErrorCode::kSyntaxError, pos_, "expected ']'");
    ++pos_;
    return a;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t atom_start_ = 0;
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::size_t> atom_offsets_;
  std::vector<std::pair<int, std::size_t>> branches_;
  std::map<int, OpenRing> open_rings_;
  int prev_ = -1;
  std::optional<char> bond_symbol_;
  std::size_t bond_offset_ = 0;
};

// Edmonds' blossom algorithm; returns mate[v] or -1.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(std::vector<std::vector<int>> adj)
      : n_(static_cast<int>(adj.size())), adj_(std::move(adj)), match_(n_, -1),
        parent_(n_), base_(n_), used_(n_), blossom_(n_) {}

  std::vector<int> solve() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int to : adj_[v]) {
        if (match_[to] == -1) {
          match_[to] = v;
          match_[v] = to;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int u = find_path(v);
      while (u != -1) {
        const int pv = parent_[u];
        const int ppv = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = ppv;
      }
    }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, parent_, base_;
  std::vector<bool> used_, blossom_;
};

// Whether an aromatic atom must take one double bond inside the aromatic
// system; nullopt when neither option gives an allowed valence.
std::optional<bool> needs_double_bond(const MolGraph &g, int i) {
  const Atom &a = g.atom(i);
  int sum = 0;
  for (const MolGraph::Neighbor &nb : g.neighbors(i)) {
    const Bond &b = g.bond(nb.bond);
    sum += b.aromatic ? 1 : valence_of(b.order);
  }
  const ValenceList allowed = allowed_valences(a.element, a.formal_charge);
  if (a.bracket) {
    const int base = sum + a.explicit_h;
    auto has = [&](int v) { return std::find(allowed.begin(), allowed.end(), v) != allowed.end(); };
    if (has(base)) return false;
    if (has(base + 1)) return true;
    return std::nullopt;
  }
  for (int v : allowed) {
    if (v >= sum) return v - sum >= 1;
  }
  return std::nullopt;
}

}  // namespace

MolGraph parse_smiles(std::string_view text) { return Parser(text).parse(); }

ParseResult try_parse_smiles(std::string_view text) {
  try {
    return parse_smiles(text);
  } catch (const SmilesError &e) {
    return ParseFailure{e.code(), e.offset(), e.what()};
  } catch (const Error &e) {
    return ParseFailure{e.code(), 0, e.what()};
  }
}

MolGraph kekulize(const MolGraph &g) {
  if (!g.has_aromatic_flags()) return g;
  const int n = g.atom_count();
  std::vector<int> local(n, -1);
  std::vector<int> members;
  for (int i = 0; i < n; ++i) {
    if (!g.atom(i).aromatic) continue;
    const std::optional<bool> need = needs_double_bond(g, i);
    if (!need) {
      throw Error(ErrorCode::kKekulizationFailure,
                  "aromatic atom " + std::to_string(i) + " has no valid valence");
    }
    if (*need) {
      local[i] = static_cast<int>(members.size());
      members.push_back(i);
    }
  }
  std::vector<std::vector<int>> adj(members.size());
  for (const Bond &b : g.bonds()) {
    if (b.aromatic && local[b.begin] >= 0 && local[b.end] >= 0) {
      adj[local[b.begin]].push_back(local[b.end]);
      adj[local[b.end]].push_back(local[b.begin]);
    }
  }
  const std::vector<int> mate = BlossomMatcher(std::move(adj)).solve();
  for (int m : mate) {
    if (m == -1) {
      throw Error(ErrorCode::kKekulizationFailure,
                  "no Kekule structure for the aromatic system");
    }
  }

  std::vector<Atom> atoms(g.atoms().begin(), g.atoms().end());
  for (Atom &a : atoms) a.aromatic = false;
  std::vector<Bond> bonds(g.bonds().begin(), g.bonds().end());
  for (Bond &b : bonds) {
    if (!b.aromatic) continue;
    b.aromatic = false;
    const int lb = local[b.begin];
    const int le = local[b.end];
    b.order = (lb >= 0 && le >= 0 && mate[lb] == le) ? BondOrder::kDouble
                                                     : BondOrder::kSingle;
  }
  return MolGraph(std::move(atoms), std::move(bonds));
}

namespace internal {
namespace {

std::string atom_text(const MolGraph &g, int i) {
  const Atom &a = g.atom(i);
  std::string out;
  if (!a.bracket && a.formal_charge == 0) return std::string(symbol(a.element));
  out += '[';
  out += symbol(a.element);
  const int h = hydrogen_count(g, i);
  if (h > 0) {
    out += 'H';
    if (h > 1) out += std::to_string(h);
  }
  if (a.formal_charge != 0) {
    out += a.formal_charge > 0 ? '+' : '-';
    const int magnitude = a.formal_charge > 0 ? a.formal_charge : -a.formal_charge;
    if (magnitude > 1) out += std::to_string(magnitude);
  }
  out += ']';
  return out;
}

std::string_view bond_text(BondOrder order) {
  switch (order) {
    case BondOrder::kSingle:
      return "";
    case BondOrder::kDouble:
      return "=";
    case BondOrder::kTriple:
      return "#";
  }
  return "";
}

std::string ring_label(int digit) {
  if (digit < 10) return std::string(1, static_cast<char>('0' + digit));
  return "%" + std::to_string(digit);
}

class RankedWriter {
 public:
  RankedWriter(const MolGraph &g, std::span<const int> ranks)
      : g_(g), ranks_(ranks), visit_index_(g.atom_count(), -1),
        parent_bond_(g.atom_count(), -1), children_(g.atom_count()),
        ring_bonds_(g.atom_count()), bond_seen_(g.bond_count(), false),
        open_digit_(g.bond_count(), -1) {}

  std::string write(std::vector<int> *visit_order) {
    int root = 0;
    for (int i = 0; i < g_.atom_count(); ++i) {
      if (ranks_[i] == 0) root = i;
    }
    discover(root);
    emit(root);
    if (visit_order) *visit_order = order_;
    return out_;
  }

 private:
  void discover(int a) {
    visit_index_[a] = static_cast<int>(order_.size());
    order_.push_back(a);
    std::vector<MolGraph::Neighbor> nbrs(g_.neighbors(a).begin(), g_.neighbors(a).end());
    std::sort(nbrs.begin(), nbrs.end(), [&](const auto &x, const auto &y) {
      return ranks_[x.atom] < ranks_[y.atom];
    });
    for (const MolGraph::Neighbor &nb : nbrs) {
      if (nb.bond == parent_bond_[a] || bond_seen_[nb.bond]) continue;
      bond_seen_[nb.bond] = true;
      if (visit_index_[nb.atom] < 0) {
        parent_bond_[nb.atom] = nb.bond;
        children_[a].push_back(nb.atom);
        discover(nb.atom);
      } else {
        ring_bonds_[a].push_back(nb.bond);
        ring_bonds_[nb.atom].push_back(nb.bond);
      }
    }
  }

  void emit(int a) {
    out_ += atom_text(g_, a);
    std::vector<int> rings = ring_bonds_[a];
    std::sort(rings.begin(), rings.end(), [&](int x, int y) {
      return visit_index_[g_.bond(x).other(a)] < visit_index_[g_.bond(y).other(a)];
    });
    std::vector<int> closed;
    for (int b : rings) {
      const int partner = g_.bond(b).other(a);
      if (visit_index_[partner] < visit_index_[a]) {
        out_ += ring_label(open_digit_[b]);
        closed.push_back(open_digit_[b]);
      } else {
        int digit = 1;
        while (std::find(digits_in_use_.begin(), digits_in_use_.end(), digit) !=
               digits_in_use_.end()) {
          ++digit;
        }
        digits_in_use_.push_back(digit);
        open_digit_[b] = digit;
        out_ += bond_text(g_.bond(b).order);
        out_ += ring_label(digit);
      }
    }
    for (int d : closed) {
      digits_in_use_.erase(std::find(digits_in_use_.begin(), digits_in_use_.end(), d));
    }
    const std::vector<int> &kids = children_[a];
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const bool branch = i + 1 < kids.size();
      if (branch) out_ += '(';
      out_ += bond_text(g_.bond(parent_bond_[kids[i]]).order);
      emit(kids[i]);
      if (branch) out_ += ')';
    }
  }

  const MolGraph &g_;
  std::span<const int> ranks_;
  std::vector<int> visit_index_;
  std::vector<int> parent_bond_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> ring_bonds_;
  std::vector<bool> bond_seen_;
  std::vector<int> open_digit_;
  std::vector<int> digits_in_use_;
  std::vector<int> order_;
  std::string out_;
};

}  // namespace

std::string write_ranked(const MolGraph &g, std::span<const int> ranks,
                         std::vector<int> *visit_order) {
  return RankedWriter(g, ranks).write(visit_order);
}

}  // namespace internal

std::string write_smiles_ranked(const MolGraph &g, std::span<const int> ranks) {
  return internal::write_ranked(g, ranks, nullptr);
}

std::string write_smiles(const MolGraph &g) { return canonical_form(g).smiles; }

}  // namespace molga
