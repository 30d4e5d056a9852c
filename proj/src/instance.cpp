#include "boxvas/instance.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace boxvas {

namespace {

bool is_integer_token(const std::string& s) {
  static const std::regex re("-?[0-9]+");
  return std::regex_match(s, re);
}

Int parse_int(const std::string& tok, int line) {
  if (!is_integer_token(tok)) throw ParseError(line, "non-integer token '" + tok + "'");
  return Int(tok);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

}  // namespace

Vec parse_vector(const std::string& text) {
  Vec v;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!is_integer_token(tok)) throw ParseError(0, "bad vector entry '" + tok + "' in '" + text + "'");
    v.push_back(Int(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return v;
}

InstanceFile parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::optional<InstanceFile::Kind> kind;
  std::size_t dim = 0;
  std::vector<Vec> gens;
  std::optional<std::vector<std::string>> states;
  std::optional<std::size_t> init;
  std::vector<Transition> trans;
  auto state_of = [&](const std::string& name, int ln) {
    for (std::size_t i = 0; i < states->size(); ++i)
      if ((*states)[i] == name) return i;
    throw ParseError(ln, "unknown state '" + name + "'");
  };
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    auto tok = split_ws(raw);
    if (tok.empty()) continue;
    if (!kind) {
      if (tok[0] == "vas") {
        if (tok.size() != 2) throw ParseError(line, "expected 'vas <dim>'");
        Int d = parse_int(tok[1], line);
        if (d < 1 || d > 64) throw ParseError(line, "dimension must be in [1, 64]");
        dim = d.convert_to<std::size_t>();
        kind = InstanceFile::Kind::Vas;
      } else if (tok[0] == "vass1") {
        if (tok.size() != 1) throw ParseError(line, "expected 'vass1'");
        kind = InstanceFile::Kind::Vass1;
      } else {
        throw ParseError(line, "expected 'vas <dim>' or 'vass1' header");
      }
      continue;
    }
    if (*kind == InstanceFile::Kind::Vas) {
      if (tok.size() != dim)
        throw ParseError(line, "generator has " + std::to_string(tok.size()) +
                                   " entries, expected " + std::to_string(dim));
      Vec g;
      for (const auto& t : tok) g.push_back(parse_int(t, line));
      gens.push_back(std::move(g));
      continue;
    }
    if (tok[0] == "states") {
      if (states) throw ParseError(line, "duplicate 'states' line");
      if (tok.size() < 2) throw ParseError(line, "'states' needs at least one name");
      states.emplace(tok.begin() + 1, tok.end());
      for (std::size_t i = 0; i < states->size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if ((*states)[i] == (*states)[j])
            throw ParseError(line, "duplicate state '" + (*states)[i] + "'");
    } else if (tok[0] == "init") {
      if (!states) throw ParseError(line, "'init' before 'states'");
      if (init) throw ParseError(line, "duplicate 'init' line");
      if (tok.size() != 2) throw ParseError(line, "expected 'init <state>'");
      init = state_of(tok[1], line);
    } else if (tok[0] == "trans") {
      if (!states) throw ParseError(line, "'trans' before 'states'");
      if (tok.size() != 4) throw ParseError(line, "expected 'trans <src> <weight> <dst>'");
      Int w = parse_int(tok[2], line);
      if (abs_int(w) > (Int(1) << 31)) throw ParseError(line, "weight exceeds 2^31");
      trans.push_back({state_of(tok[1], line), w.convert_to<std::int64_t>(), state_of(tok[3], line)});
    } else {
      throw ParseError(line, "unknown directive '" + tok[0] + "'");
    }
  }
  if (!kind) throw ParseError(line + 1, "empty instance");
  InstanceFile f;
  f.kind = *kind;
  if (*kind == InstanceFile::Kind::Vas) {
    f.vas.emplace(dim, std::move(gens));
  } else {
    if (!states) throw ParseError(line + 1, "missing 'states' line");
    if (!init) throw ParseError(line + 1, "missing 'init' line");
    f.vass1.emplace(std::move(*states), std::move(trans));
    f.init = *init;
  }
  return f;
}

InstanceFile load_instance(const std::string& file_path) {
  std::ifstream in(file_path);
  if (!in) throw ParseError(0, "cannot open instance file '" + file_path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string serialize_instance(const InstanceFile& inst) {
  std::ostringstream os;
  if (inst.kind == InstanceFile::Kind::Vas) {
    os << "vas " << inst.vas->dim() << "\n";
    for (const auto& g : inst.vas->generators()) {
      for (std::size_t i = 0; i < g.size(); ++i) os << (i ? " " : "") << g[i];
      os << "\n";
    }
  } else {
    const auto& s = *inst.vass1;
    os << "vass1\nstates";
    for (const auto& n : s.states()) os << " " << n;
    os << "\ninit " << s.states()[inst.init] << "\n";
    for (const auto& t : s.transitions())
      os << "trans " << s.states()[t.src] << " " << t.weight << " " << s.states()[t.dst] << "\n";
  }
  return os.str();
}

}  // namespace boxvas
