#include "duplex/dupcat.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <regex>
#include <sstream>

namespace duplex {

bool is_valid(const SimplicialOperator& op) {
  if (op.m < -1 || op.n < -1 || static_cast<int>(op.values.size()) != op.m + 1) return false;
  for (int i = 0; i <= op.m; ++i) {
    if (op.values[i] < 0 || op.values[i] > op.n) return false;
    if (i > 0 && op.values[i] < op.values[i - 1]) return false;
  }
  return true;
}

SimplicialOperator identity_op(int n) {
  SimplicialOperator op{n, n, {}};
  for (int i = 0; i <= n; ++i) op.values.push_back(i);
  return op;
}

SimplicialOperator face_op(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw Error(ErrorKind::DegreeMismatch, "face index out of range");
  SimplicialOperator op{n, n - 1, {}};
  for (int v = 0; v <= n; ++v) {
    if (v != i) op.values.push_back(v);
  }
  return op;
}

SimplicialOperator degen_op(int n, int j) {
  if (n < 0 || j < 0 || j > n) throw Error(ErrorKind::DegreeMismatch, "degeneracy index out of range");
  SimplicialOperator op{n, n + 1, {}};
  for (int v = 0; v <= n; ++v) {
    op.values.push_back(v);
    if (v == j) op.values.push_back(v);
  }
  return op;
}

SimplicialOperator compose_op(const SimplicialOperator& a, const SimplicialOperator& b) {
  if (a.n != b.m) {
    throw Error(ErrorKind::DegreeMismatch, "cannot compose " + std::to_string(a.n) + "-> after ->" + std::to_string(b.m));
  }
  SimplicialOperator out{b.n, a.m, {}};
  for (int v : a.values) out.values.push_back(b.values[v]);
  return out;
}

SimplicialOperator ordinal_sum(const SimplicialOperator& a, const SimplicialOperator& b) {
  // Underlying ordinal maps have domain size m+1 and codomain size n+1.
  SimplicialOperator out{a.n + b.n + 1, a.m + b.m + 1, a.values};
  for (int v : b.values) out.values.push_back(v + a.n + 1);
  return out;
}

SimplicialOperator rev_op(const SimplicialOperator& a) {
  SimplicialOperator out{a.n, a.m, std::vector<int>(a.m + 1)};
  for (int i = 0; i <= a.m; ++i) out.values[i] = a.n - a.values[a.m - i];
  return out;
}

std::vector<SimplicialOperator> all_operators(int n, int m) {
  std::vector<SimplicialOperator> out;
  SimplicialOperator op{n, m, std::vector<int>(m + 1, 0)};
  if (m >= 0 && n < 0) return out;
  std::function<void(int, int)> go = [&](int i, int lo) {
    if (i == m + 1) {
      out.push_back(op);
      return;
    }
    for (int v = lo; v <= n; ++v) {
      op.values[i] = v;
      go(i + 1, v);
    }
  };
  go(0, 0);
  return out;
}

std::vector<Generator> factor(const SimplicialOperator& op) {
  std::vector<bool> hit(op.n + 1, false);
  for (int v : op.values) hit[v] = true;
  std::vector<Generator> word;
  int level = op.n;
  for (int i = op.n; i >= 0; --i) {
    if (!hit[i]) word.push_back({'d', i, level--});
  }
  for (int p = 0; p < op.m; ++p) {
    if (op.values[p] == op.values[p + 1]) word.push_back({'s', p, level++});
  }
  return word;
}

SimplicialOperator from_word(int n, const std::vector<Generator>& word) {
  SimplicialOperator acc = identity_op(n);
  for (const auto& g : word) {
    if (g.level != acc.m) throw Error(ErrorKind::DegreeMismatch, "generator at the wrong level");
    acc = compose_op(g.kind == 'd' ? face_op(g.level, g.index) : degen_op(g.level, g.index), acc);
  }
  return acc;
}

DuplicialOperator t_op(int n, int k) {
  if (n < 0) throw Error(ErrorKind::DegreeMismatch, "t is not defined in degree -1");
  return {k, identity_op(n)};
}

std::pair<int, Generator> push_generator(const Generator& gen, int k, RewriteStats* stats) {
  Generator g = gen;
  int c = 0;
  for (int step = 0; step < k; ++step) {
    if (g.kind == 'd') {
      if (g.index == 0) {
        g.index = g.level;  // d_0 t_{n+1} = d_{n+1}
      } else {
        --g.index;
        ++c;
      }
    } else {
      if (g.index == 0) {
        g.index = g.level;  // s_0 t_n = t_{n+1}^2 s_n
        c += 2;
      } else {
        --g.index;
        ++c;
      }
    }
  }
  if (stats) {
    stats->steps += k;
    stats->max_tpow = std::max(stats->max_tpow, c);
  }
  return {c, g};
}

DuplicialOperator compose_duplicial(const DuplicialOperator& a, const DuplicialOperator& b, RewriteStats* stats) {
  if (a.n() != b.m()) {
    throw Error(ErrorKind::DegreeMismatch, "cannot compose " + to_string(a) + " after " + to_string(b));
  }
  int k = b.k;
  std::vector<Generator> word;
  for (const auto& g : factor(a.simp)) {
    auto [c, g2] = push_generator(g, k, stats);
    word.push_back(g2);
    k = c;
  }
  return {a.k + k, compose_op(from_word(b.m(), word), b.simp)};
}

std::string to_string(const DuplicialOperator& op) {
  std::ostringstream os;
  os << "t^" << op.k << " . ";
  auto word = factor(op.simp);
  if (word.empty()) os << "id";
  for (auto it = word.rbegin(); it != word.rend(); ++it) os << it->kind << "_{" << it->index << "}";
  os << " @ " << op.n() << "->" << op.m();
  return os.str();
}

DuplicialOperator parse_duplicial(const std::string& text) {
  static const std::regex whole(R"(^\s*(t(?:\^(\d+))?\s*\.\s*)?(.*?)\s*@\s*(-?\d+)\s*->\s*(-?\d+)\s*$)");
  static const std::regex token(R"(([sd])_\{?(\d+)\}?)");
  std::smatch m;
  if (!std::regex_match(text, m, whole)) throw Error(ErrorKind::InvalidInput, "cannot parse operator: " + text);
  DuplicialOperator op;
  op.k = m[2].matched ? std::stoi(m[2]) : (m[1].matched ? 1 : 0);
  const std::string body = m[3];
  const int n = std::stoi(m[4]);
  const int target = std::stoi(m[5]);
  std::vector<std::pair<char, int>> tokens;
  if (body != "id" && !body.empty()) {
    auto it = std::sregex_iterator(body.begin(), body.end(), token);
    std::string consumed;
    for (; it != std::sregex_iterator(); ++it) {
      tokens.push_back({(*it)[1].str()[0], std::stoi((*it)[2])});
      consumed += it->str();
    }
    std::string stripped;
    for (char ch : body) {
      if (!std::isspace(static_cast<unsigned char>(ch))) stripped += ch;
    }
    if (stripped != consumed) throw Error(ErrorKind::InvalidInput, "bad generator word: " + body);
  }
  std::vector<Generator> word;
  int level = n;
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    Generator g{it->first, it->second, level};
    if (g.index > level || level < 0) throw Error(ErrorKind::DegreeMismatch, "generator index out of range: " + text);
    word.push_back(g);
    level = g.out_level();
  }
  if (level != target) throw Error(ErrorKind::DegreeMismatch, "word ends in degree " + std::to_string(level));
  if (target < 0 && op.k != 0) throw Error(ErrorKind::DegreeMismatch, "t is not defined in degree -1");
  op.simp = from_word(n, word);
  return op;
}

PeriodicFamily periodic_family(int p, int r, int trunc) {
  PeriodicFamily out{p, r, {}, {}};
  const int period = r * (p + 1);
  out.elements.resize(trunc + 1);
  for (int n = 0; n <= trunc; ++n) {
    std::vector<int> f(n + 1);
    std::function<void(int)> go = [&](int i) {
      if (i == n + 1) {
        out.elements[n].push_back(f);
        return;
      }
      const int lo = i == 0 ? 0 : f[i - 1];
      const int hi = i == 0 ? period - 1 : f[0] + p + 1;
      for (int v = lo; v <= hi; ++v) {
        f[i] = v;
        go(i + 1);
      }
    };
    go(0);
  }
  std::vector<std::map<std::vector<int>, int>> index(trunc + 1);
  for (int n = 0; n <= trunc; ++n) {
    for (int s = 0; s < static_cast<int>(out.elements[n].size()); ++s) index[n][out.elements[n][s]] = s;
  }
  auto normalize = [&](std::vector<int> f) {
    const int shift = (f[0] >= 0 ? f[0] / period : -((-f[0] + period - 1) / period)) * period;
    for (int& v : f) v -= shift;
    return f;
  };
  auto precompose = [&](int n, const std::vector<int>& theta) {
    std::vector<int> map;
    const int m = static_cast<int>(theta.size()) - 1;
    for (const auto& f : out.elements[n]) {
      std::vector<int> g;
      for (int v : theta) g.push_back(f[v]);
      map.push_back(index[m].at(normalize(g)));
    }
    return map;
  };
  auto X = TruncAugSimplicial<SetTarget>::build(
      SetTarget{}, trunc, false, [&](int n) { return static_cast<int>(out.elements[n].size()); },
      [&](int n, int i) { return precompose(n, face_op(n, i).values); },
      [&](int n, int j) { return precompose(n, degen_op(n, j).values); });
  out.family.base = X;
  for (int n = 0; n <= trunc; ++n) {
    std::vector<int> map;
    for (const auto& f : out.elements[n]) {
      std::vector<int> g{f[n] - (p + 1)};
      g.insert(g.end(), f.begin(), f.end() - 1);
      map.push_back(index[n].at(normalize(g)));
    }
    out.family.t.push_back(std::move(map));
  }
  return out;
}

}  // namespace duplex
