// minismt: a deliberately tiny SMT-LIB2 solver for the integer fragment the
// mignotte toolkit emits. It reads a script on stdin and answers each
// (check-sat) by brute-force search, so it doubles as an independent
// cross-check for the CRT-based enumeration and as a stand-in solver when
// no real one is installed.
//
// Supported forms:
//   (set-logic ...)                     ignored
//   (declare-const <name> Int)
//   (assert (> S <k>)) / (assert (< S <k>))
//   (assert (and <supported>...))
//   (assert (= <var> (mod S <p>)))
//   (assert (= <var> <v>))
//   (assert (distinct S <v>))
//   (check-sat) / (get-model)
//
// Anything else makes every later (check-sat) answer unknown.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

using Int = boost::multiprecision::cpp_int;

namespace {

struct Node {
  std::string atom; // empty for lists
  std::vector<Node> kids;
  bool is_atom() const { return kids.empty() && !atom.empty(); }
};

std::vector<std::string> lex(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    if (ch == '(' || ch == ')') {
      if (!cur.empty()) { tokens.push_back(cur); cur.clear(); }
      tokens.push_back(std::string(1, ch));
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) { tokens.push_back(cur); cur.clear(); }
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  return tokens;
}

Node parse_node(const std::vector<std::string>& toks, std::size_t& i) {
  Node n;
  if (toks[i] == "(") {
    ++i;
    while (i < toks.size() && toks[i] != ")") n.kids.push_back(parse_node(toks, i));
    if (i < toks.size()) ++i; // consume ')'
    if (n.kids.empty()) n.atom = "()"; // keep empty lists distinguishable
  } else {
    n.atom = toks[i++];
  }
  return n;
}

bool is_int(const std::string& t) {
  if (t.empty()) return false;
  std::size_t i = t[0] == '-' ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

struct State {
  std::vector<std::string> declared;        // declaration order
  std::map<std::string, Int> mod_links;     // var -> p  (var = S mod p)
  std::map<std::string, Int> bindings;      // var -> required value
  std::set<Int> exclusions;                 // distinct S v
  std::optional<Int> lower;                 // S > lower
  std::optional<Int> upper;                 // S < upper
  bool unsupported = false;

  std::optional<std::map<std::string, Int>> model;
  bool have_answer = false;
  bool last_sat = false;
};

void apply_assert(State& st, const Node& term);

void apply_and(State& st, const Node& term) {
  for (std::size_t i = 1; i < term.kids.size(); ++i) apply_assert(st, term.kids[i]);
}

void apply_assert(State& st, const Node& term) {
  const auto& k = term.kids;
  if (k.size() == 3 && k[0].atom == ">" && k[1].atom == "S" && is_int(k[2].atom)) {
    Int v(k[2].atom);
    if (!st.lower || v > *st.lower) st.lower = v;
    return;
  }
  if (k.size() == 3 && k[0].atom == "<" && k[1].atom == "S" && is_int(k[2].atom)) {
    Int v(k[2].atom);
    if (!st.upper || v < *st.upper) st.upper = v;
    return;
  }
  if (!k.empty() && k[0].atom == "and") { apply_and(st, term); return; }
  if (k.size() == 3 && k[0].atom == "distinct" && k[1].atom == "S" &&
      is_int(k[2].atom)) {
    st.exclusions.insert(Int(k[2].atom));
    return;
  }
  if (k.size() == 3 && k[0].atom == "=" && k[1].is_atom()) {
    const std::string& var = k[1].atom;
    if (is_int(k[2].atom)) {
      st.bindings[var] = Int(k[2].atom);
      return;
    }
    const auto& rhs = k[2].kids;
    if (rhs.size() == 3 && rhs[0].atom == "mod" && rhs[1].atom == "S" &&
        is_int(rhs[2].atom)) {
      st.mod_links[var] = Int(rhs[2].atom);
      return;
    }
  }
  st.unsupported = true;
}

void check_sat(State& st) {
  st.have_answer = true;
  st.model.reset();
  st.last_sat = false;
  if (st.unsupported) {
    std::cout << "unknown\n";
    return;
  }

  Int lo = st.lower ? *st.lower + 1 : Int(1);
  // Any window of length prod(moduli) holds at least one solution of the
  // congruence part, so finitely many exclusions need finitely many windows.
  Int prod = 1;
  for (const auto& [var, p] : st.mod_links) prod *= p;
  Int cap = lo + (Int(st.exclusions.size()) + 1) * prod;
  Int hi = st.upper ? *st.upper - 1 : cap;
  if (hi > cap) hi = cap;

  for (Int s = lo; s <= hi; ++s) {
    if (st.exclusions.count(s)) continue;
    bool ok = true;
    for (const auto& [var, value] : st.bindings) {
      if (var == "S") {
        if (s != value) { ok = false; break; }
        continue;
      }
      auto link = st.mod_links.find(var);
      if (link == st.mod_links.end()) continue; // free, assigned below
      if (s % link->second != value) { ok = false; break; }
    }
    if (!ok) continue;
    std::map<std::string, Int> model;
    model["S"] = s;
    for (const auto& [var, p] : st.mod_links) model[var] = s % p;
    for (const auto& [var, value] : st.bindings) model.emplace(var, value);
    st.model = std::move(model);
    st.last_sat = true;
    std::cout << "sat\n";
    return;
  }
  std::cout << "unsat\n";
}

void get_model(const State& st) {
  if (!st.have_answer || !st.last_sat || !st.model) return;
  std::cout << "(\n";
  for (const std::string& name : st.declared) {
    auto it = st.model->find(name);
    if (it == st.model->end()) continue;
    std::cout << "  (define-fun " << name << " () Int " << it->second << ")\n";
  }
  std::cout << ")\n";
}

} // namespace

int main() {
  std::string input((std::istreambuf_iterator<char>(std::cin)),
                    std::istreambuf_iterator<char>());
  auto toks = lex(input);

  State st;
  std::size_t i = 0;
  while (i < toks.size()) {
    Node cmd = parse_node(toks, i);
    if (cmd.kids.empty()) continue;
    const std::string& head = cmd.kids[0].atom;
    if (head == "set-logic") continue;
    if (head == "declare-const" && cmd.kids.size() == 3) {
      st.declared.push_back(cmd.kids[1].atom);
      continue;
    }
    if (head == "assert" && cmd.kids.size() == 2) {
      apply_assert(st, cmd.kids[1]);
      continue;
    }
    if (head == "check-sat") { check_sat(st); continue; }
    if (head == "get-model") { get_model(st); continue; }
    st.unsupported = true;
  }
  return 0;
}
