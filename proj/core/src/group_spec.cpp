#include "pcode/group_spec.hpp"

#include <algorithm>
#include <cctype>

#include "pcode/errors.hpp"
#include "pcode/group_ops.hpp"
#include "pcode/lattice.hpp"
#include "pcode/small_groups.hpp"

namespace pcode {

bool GroupSpec::operator==(const GroupSpec& other) const {
  return node == other.node && atom == other.atom && params == other.params &&
         children == other.children && (node != Node::Wreath || wreath_t == other.wreath_t);
}

namespace {

struct Token {
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] == '(' || text[i] == ')') {
      out.push_back({std::string(1, text[i]), i});
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '(' && text[i] != ')') {
      ++i;
    }
    out.push_back({text.substr(start, i - start), start});
  }
  return out;
}

long parse_long(const std::string& s, std::size_t pos) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      })) {
    throw ParseError("expected a number, got '" + s + "'", pos);
  }
  return std::stol(s);
}

// Atom heads with their parameter arity; elemab uses p^k syntax.
const std::vector<std::pair<std::string, int>> kAtoms = {
    {"sym", 1},      {"alt", 1},       {"cyclic", 1},   {"dihedral", 1},
    {"quaternion", 1}, {"semidihedral", 1}, {"modular", 1}, {"elemab", -1},
    {"psl2", 1},     {"pgl2", 1},      {"sl2", 1},      {"gl2", 1},
    {"psigmal2", 1}, {"pgammal2", 1},  {"ext", 2},      {"agl1", 1},
    {"agl2", 1},     {"m10", 0},
};

GroupSpec parse_atom(const Token& tok) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t colon = tok.text.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(tok.text.substr(start));
      break;
    }
    parts.push_back(tok.text.substr(start, colon - start));
    start = colon + 1;
  }
  for (const auto& [head, arity] : kAtoms) {
    if (parts[0] != head) continue;
    GroupSpec spec;
    spec.node = GroupSpec::Node::Atom;
    spec.atom = head;
    if (arity == -1) {  // elemab:p^k
      if (parts.size() != 2) throw ParseError("elemab expects p^k", tok.pos);
      std::size_t caret = parts[1].find('^');
      if (caret == std::string::npos) {
        spec.params = {parse_long(parts[1], tok.pos), 1};
      } else {
        spec.params = {parse_long(parts[1].substr(0, caret), tok.pos),
                       parse_long(parts[1].substr(caret + 1), tok.pos)};
      }
      return spec;
    }
    if (static_cast<int>(parts.size()) - 1 != arity) {
      throw ParseError("atom '" + head + "' expects " + std::to_string(arity) +
                           " parameter(s)",
                       tok.pos);
    }
    for (int i = 1; i <= arity; ++i) spec.params.push_back(parse_long(parts[i], tok.pos));
    return spec;
  }
  throw ParseError("unknown group atom '" + parts[0] + "'", tok.pos);
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::size_t end_pos)
      : toks_(std::move(toks)), end_pos_(end_pos) {}

  GroupSpec parse() {
    GroupSpec spec = parse_product();
    if (i_ < toks_.size()) {
      throw ParseError("unexpected token '" + toks_[i_].text + "'", toks_[i_].pos);
    }
    return spec;
  }

 private:
  const Token* peek() const { return i_ < toks_.size() ? &toks_[i_] : nullptr; }

  GroupSpec parse_product() {
    GroupSpec first = parse_postfix();
    std::vector<GroupSpec> factors = {std::move(first)};
    while (peek() && peek()->text == "x") {
      ++i_;
      factors.push_back(parse_postfix());
    }
    if (factors.size() == 1) return std::move(factors[0]);
    GroupSpec spec;
    spec.node = GroupSpec::Node::Direct;
    spec.children = std::move(factors);
    return spec;
  }

  GroupSpec parse_postfix() {
    GroupSpec spec = parse_primary();
    while (peek()) {
      const std::string& t = peek()->text;
      long wt = 0;
      if (t == "wr2") {
        wt = 2;
      } else if (t.rfind("wr:", 0) == 0) {
        wt = parse_long(t.substr(3), peek()->pos);
        if (wt < 1) throw ParseError("wreath power must be >= 1", peek()->pos);
      } else {
        break;
      }
      ++i_;
      GroupSpec outer;
      outer.node = GroupSpec::Node::Wreath;
      outer.wreath_t = wt;
      outer.children.push_back(std::move(spec));
      spec = std::move(outer);
    }
    return spec;
  }

  GroupSpec parse_primary() {
    if (!peek()) throw ParseError("unexpected end of input", end_pos_);
    if (peek()->text == "(") {
      ++i_;
      GroupSpec inner = parse_product();
      if (!peek() || peek()->text != ")") {
        throw ParseError("missing ')'", peek() ? peek()->pos : end_pos_);
      }
      ++i_;
      return inner;
    }
    if (peek()->text == ")") throw ParseError("unexpected ')'", peek()->pos);
    Token tok = *peek();
    ++i_;
    return parse_atom(tok);
  }

  std::vector<Token> toks_;
  std::size_t end_pos_;
  std::size_t i_ = 0;
};

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  return Parser(tokenize(text), text.size()).parse();
}

std::string GroupSpec::to_string() const {
  switch (node) {
    case Node::Atom: {
      if (atom == "m10") return atom;
      if (atom == "elemab") {
        return atom + ":" + std::to_string(params[0]) + "^" + std::to_string(params[1]);
      }
      std::string s = atom;
      for (long p : params) s += ":" + std::to_string(p);
      return s;
    }
    case Node::Direct: {
      std::string s;
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) s += " x ";
        bool need_parens = children[i].node == Node::Direct;
        s += need_parens ? "(" + children[i].to_string() + ")" : children[i].to_string();
      }
      return s;
    }
    case Node::Wreath: {
      const GroupSpec& inner = children[0];
      std::string base = inner.to_string();
      if (inner.node == Node::Direct) base = "(" + base + ")";
      return base + (wreath_t == 2 ? " wr2" : " wr:" + std::to_string(wreath_t));
    }
  }
  return "?";
}

namespace {

// Atoms are built under the library's default materialization cap; the
// command-level --max-order is enforced on top by eval_group_spec (it can
// lower the bound, and raising it affects the product/wreath closures).
GroupPtr eval_atom(const GroupSpec& spec) {
  const std::string& a = spec.atom;
  const std::vector<long>& p = spec.params;
  if (a == "sym") return symmetric_group(static_cast<int>(p[0]));
  if (a == "alt") return alternating_group(static_cast<int>(p[0]));
  if (a == "cyclic") return cyclic_group(p[0]);
  if (a == "dihedral") return dihedral_group(p[0]);
  if (a == "quaternion") return quaternion_group(p[0]);
  if (a == "semidihedral") return semidihedral_group(p[0]);
  if (a == "modular") return modular_group(p[0]);
  if (a == "elemab") return elementary_abelian_group(p[0], p[1]);
  if (a == "psl2") return psl2(p[0]);
  if (a == "pgl2") return pgl2(p[0]);
  if (a == "sl2") return sl2(p[0]);
  if (a == "gl2") return gl2(p[0]);
  if (a == "psigmal2") return psigmal2(p[0]);
  if (a == "pgammal2") return pgammal2(p[0]);
  if (a == "ext") return extension_t_delta_phi(p[0], p[1]).group;
  if (a == "agl1") return agl1(p[0]);
  if (a == "agl2") return agl2(p[0]);
  if (a == "m10") return m10().group;
  throw BadTag("unknown atom " + a);
}

}  // namespace

ResolvedGroup eval_group_spec(const GroupSpec& spec, long order_cap) {
  switch (spec.node) {
    case GroupSpec::Node::Atom: {
      GroupPtr g = eval_atom(spec);
      if (g->order() > order_cap) {
        throw CapExceeded("group order " + std::to_string(g->order()) + " exceeds cap");
      }
      return ResolvedGroup{spec, g};
    }
    case GroupSpec::Node::Direct: {
      GroupPtr acc = eval_group_spec(spec.children[0], order_cap).group;
      for (std::size_t i = 1; i < spec.children.size(); ++i) {
        acc = direct_product(acc, eval_group_spec(spec.children[i], order_cap).group);
        if (acc->order() > order_cap) throw CapExceeded("product order exceeds cap");
      }
      return ResolvedGroup{spec, acc};
    }
    case GroupSpec::Node::Wreath: {
      GroupPtr inner = eval_group_spec(spec.children[0], order_cap).group;
      WreathProduct w = wreath_symmetric(inner, static_cast<int>(spec.wreath_t), order_cap);
      return ResolvedGroup{spec, w.group};
    }
  }
  throw BadTag("bad group spec node");
}

std::string SubgroupSpec::to_string() const {
  switch (kind) {
    case Kind::MaximalTag:
      return "maximal:" + tag;
    case Kind::Generators: {
      std::string s = "generators:[";
      for (std::size_t i = 0; i < generator_images.size(); ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < generator_images[i].size(); ++j) {
          if (j) s += ",";
          s += std::to_string(generator_images[i][j]);
        }
        s += "]";
      }
      return s + "]";
    }
    case Kind::PointStabilizer:
      return "point-stabilizer";
    case Kind::Socle:
      return "socle";
    case Kind::Sylow2:
      return "sylow2";
    case Kind::All:
      return "all";
    case Kind::AllMaximal:
      return "all-maximal";
    case Kind::PreimageOf:
      return "preimage-of:" + inner->to_string();
  }
  return "?";
}

SubgroupSpec parse_subgroup_spec(const std::string& text) {
  SubgroupSpec spec;
  if (text == "point-stabilizer") {
    spec.kind = SubgroupSpec::Kind::PointStabilizer;
  } else if (text == "socle") {
    spec.kind = SubgroupSpec::Kind::Socle;
  } else if (text == "sylow2") {
    spec.kind = SubgroupSpec::Kind::Sylow2;
  } else if (text == "all") {
    spec.kind = SubgroupSpec::Kind::All;
  } else if (text == "all-maximal") {
    spec.kind = SubgroupSpec::Kind::AllMaximal;
  } else if (text.rfind("maximal:", 0) == 0) {
    spec.kind = SubgroupSpec::Kind::MaximalTag;
    spec.tag = text.substr(8);
    MaximalTag::parse(spec.tag);  // validate
  } else if (text.rfind("preimage-of:", 0) == 0) {
    spec.kind = SubgroupSpec::Kind::PreimageOf;
    spec.inner = std::make_shared<SubgroupSpec>(parse_subgroup_spec(text.substr(12)));
  } else if (text.rfind("generators:", 0) == 0) {
    spec.kind = SubgroupSpec::Kind::Generators;
    const std::string body = text.substr(11);
    std::size_t i = 0;
    auto expect = [&](char c) {
      if (i >= body.size() || body[i] != c) {
        throw ParseError(std::string("expected '") + c + "' in generator list", 11 + i);
      }
      ++i;
    };
    expect('[');
    while (i < body.size() && body[i] != ']') {
      expect('[');
      std::vector<uint8_t> img;
      while (i < body.size() && body[i] != ']') {
        std::size_t start = i;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) ++i;
        if (i == start) throw ParseError("expected a point", 11 + i);
        img.push_back(static_cast<uint8_t>(std::stol(body.substr(start, i - start))));
        if (i < body.size() && body[i] == ',') ++i;
      }
      expect(']');
      spec.generator_images.push_back(std::move(img));
      if (i < body.size() && body[i] == ',') ++i;
    }
    expect(']');
    if (i != body.size()) throw ParseError("trailing characters in generator list", 11 + i);
  } else {
    throw ParseError("unknown subgroup spec '" + text + "'", 0);
  }
  return spec;
}

namespace {

bool atom_is(const GroupSpec& spec, const std::string& head) {
  return spec.node == GroupSpec::Node::Atom && spec.atom == head;
}

}  // namespace

std::vector<ResolvedSubgroup> resolve_subgroups(const ResolvedGroup& g,
                                                const SubgroupSpec& spec) {
  using Kind = SubgroupSpec::Kind;
  switch (spec.kind) {
    case Kind::Sylow2:
      return {{sylow2(g.group), "sylow2"}};
    case Kind::PointStabilizer: {
      std::vector<Perm> kept;
      for (const Perm& x : g.group->elements()) {
        if (x[0] == 0) kept.push_back(x);
      }
      return {{Subgroup{g.group, group_from_sorted_elements(std::move(kept))},
               "point-stabilizer"}};
    }
    case Kind::Generators: {
      std::vector<Perm> gens;
      for (const auto& img : spec.generator_images) gens.push_back(Perm(img));
      return {{make_subgroup(g.group, gens), spec.to_string()}};
    }
    case Kind::All: {
      std::vector<ResolvedSubgroup> out;
      int i = 0;
      for (Subgroup& h : all_subgroups(g.group)) {
        out.push_back({std::move(h), "subgroup#" + std::to_string(i++)});
      }
      return out;
    }
    case Kind::AllMaximal: {
      if (atom_is(g.spec, "psl2") || atom_is(g.spec, "pgl2")) {
        // Table rows, in table order.
        long q = g.spec.params[0];
        bool is_psl = atom_is(g.spec, "psl2");
        std::vector<ResolvedSubgroup> out;
        for (const MaximalTag& tag : is_psl ? psl2_maximal_tags(q) : pgl2_maximal_tags(q)) {
          Subgroup h = is_psl ? psl2_maximal(q, tag) : pgl2_maximal(q, tag);
          out.push_back({std::move(h), "maximal:" + tag.to_string()});
        }
        return out;
      }
      std::vector<ResolvedSubgroup> out;
      int i = 0;
      for (Subgroup& h : maximal_subgroups(g.group)) {
        out.push_back({std::move(h), "maximal#" + std::to_string(i++)});
      }
      return out;
    }
    case Kind::MaximalTag: {
      MaximalTag tag = MaximalTag::parse(spec.tag);
      if (atom_is(g.spec, "psl2")) {
        return {{psl2_maximal(g.spec.params[0], tag), "maximal:" + spec.tag}};
      }
      if (atom_is(g.spec, "pgl2")) {
        return {{pgl2_maximal(g.spec.params[0], tag), "maximal:" + spec.tag}};
      }
      throw BadTag("maximal:<tag> requires a psl2 or pgl2 group");
    }
    case Kind::Socle: {
      long q = 0;
      if (atom_is(g.spec, "psigmal2") || atom_is(g.spec, "pgammal2") ||
          atom_is(g.spec, "ext") || atom_is(g.spec, "psl2") || atom_is(g.spec, "pgl2")) {
        q = g.spec.params[0];
      } else if (atom_is(g.spec, "m10")) {
        q = 9;
      } else {
        throw BadTag("socle is defined for the projective-family atoms");
      }
      return {{socle_subgroup(g.group, q), "socle"}};
    }
    case Kind::PreimageOf: {
      if (!atom_is(g.spec, "sl2")) {
        throw BadTag("preimage-of requires an sl2:q group (recorded quotient to psl2:q)");
      }
      long q = g.spec.params[0];
      GroupSpec inner_group;
      inner_group.node = GroupSpec::Node::Atom;
      inner_group.atom = "psl2";
      inner_group.params = {q};
      ResolvedGroup t{inner_group, psl2(q)};
      std::vector<ResolvedSubgroup> out;
      for (ResolvedSubgroup& r : resolve_subgroups(t, *spec.inner)) {
        out.push_back({preimage_in_sl2(q, r.subgroup),
                       "preimage-of:" + r.description});
      }
      return out;
    }
  }
  throw BadTag("bad subgroup spec");
}

}  // namespace pcode
