#include "idemlab/group_io.hpp"

#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "idemlab/error.hpp"

namespace idemlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_count(std::string_view word, std::size_t line) {
  if (word.empty()) throw ParseError(line, "expected a number");
  std::size_t v = 0;
  for (char c : word) {
    if (c < '0' || c > '9') throw ParseError(line, "expected a number, got '" + std::string(word) + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
    if (v > (1u << 30)) throw ParseError(line, "number too large");
  }
  return v;
}

void check_sampled_associativity(const FiniteGroup& g) {
  if (g.order() <= 512) {
    check_associative(g);
    return;
  }
  std::mt19937_64 rng(0x1de3u);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.order() - 1));
  for (int i = 0; i < 1000000; ++i) {
    Elem a = pick(rng), b = pick(rng), c = pick(rng);
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) throw InvalidInput("table is not associative");
  }
}

}  // namespace

std::vector<std::uint32_t> parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::uint32_t> perm(degree);
  for (std::size_t i = 0; i < degree; ++i) perm[i] = static_cast<std::uint32_t>(i);
  std::vector<std::uint8_t> used(degree, 0);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) { throw InvalidInput("bad cycle notation '" + std::string(text) + "': " + why); };
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++pos;
      continue;
    }
    if (c != '(') fail("expected '('");
    std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) fail("unclosed cycle");
    std::vector<std::uint32_t> cycle;
    std::istringstream in{std::string(text.substr(pos + 1, close - pos - 1))};
    std::string tok;
    while (in >> tok) {
      for (char& ch : tok) {
        if (ch == ',') ch = ' ';
      }
      std::istringstream parts(tok);
      std::string part;
      while (parts >> part) {
        for (char ch : part) {
          if (ch < '0' || ch > '9') fail("non-numeric point '" + part + "'");
        }
        std::size_t p = std::stoul(part);
        if (p >= degree) fail("point " + part + " outside degree " + std::to_string(degree));
        if (used[p]) fail("point " + part + " repeated");
        used[p] = 1;
        cycle.push_back(static_cast<std::uint32_t>(p));
      }
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
    pos = close + 1;
  }
  return perm;
}

std::string cycle_notation(const std::vector<std::uint32_t>& perm) {
  std::vector<std::uint8_t> seen(perm.size(), 0);
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
      j = perm[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

GroupSpec parse_group_spec(std::string_view text) {
  GroupSpec spec;
  std::size_t line_no = 0;
  std::size_t table_rows_read = 0;
  bool have_name = false;
  bool have_shape = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (have_shape && spec.kind == GroupSpec::Kind::Table && table_rows_read < spec.table_order) {
      std::istringstream row{std::string(line)};
      std::string tok;
      std::size_t count = 0;
      while (row >> tok) {
        std::size_t v = parse_count(tok, line_no);
        if (v >= spec.table_order) throw ParseError(line_no, "table entry " + tok + " out of range");
        spec.table.push_back(static_cast<Elem>(v));
        ++count;
      }
      if (count != spec.table_order) {
        throw ParseError(line_no, "table row has " + std::to_string(count) + " entries, expected " +
                                      std::to_string(spec.table_order));
      }
      ++table_rows_read;
      continue;
    }

    auto space = line.find_first_of(" \t");
    std::string_view key = line.substr(0, space);
    std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
    if (key == "group") {
      if (have_name) throw ParseError(line_no, "duplicate 'group' line");
      if (rest.empty()) throw ParseError(line_no, "missing group name");
      spec.name = std::string(rest);
      have_name = true;
    } else if (key == "degree") {
      if (!have_name) throw ParseError(line_no, "'degree' before 'group'");
      if (have_shape) throw ParseError(line_no, "duplicate 'degree'/'table' line");
      spec.kind = GroupSpec::Kind::Permutation;
      spec.degree = parse_count(rest, line_no);
      if (spec.degree == 0) throw ParseError(line_no, "degree must be positive");
      have_shape = true;
    } else if (key == "gen") {
      if (!have_shape || spec.kind != GroupSpec::Kind::Permutation) {
        throw ParseError(line_no, "'gen' requires a preceding 'degree' line");
      }
      try {
        // Commas outside parentheses separate generators.
        std::size_t depth = 0, start = 0;
        for (std::size_t i = 0; i <= rest.size(); ++i) {
          char ch = i < rest.size() ? rest[i] : ',';
          if (ch == '(') ++depth;
          if (ch == ')' && depth > 0) --depth;
          if (i == rest.size() && depth != 0) throw InvalidInput("unclosed cycle");
          if (ch == ',' && depth == 0) {
            std::string_view piece = rest.substr(start, i - start);
            if (piece.find_first_not_of(" \t") == std::string_view::npos) {
              throw InvalidInput("empty generator");
            }
            spec.generators.push_back(parse_cycles(piece, spec.degree));
            start = i + 1;
          }
        }
      } catch (const InvalidInput& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (key == "table") {
      if (!have_name) throw ParseError(line_no, "'table' before 'group'");
      if (have_shape) throw ParseError(line_no, "duplicate 'degree'/'table' line");
      spec.kind = GroupSpec::Kind::Table;
      spec.table_order = parse_count(rest, line_no);
      if (spec.table_order == 0) throw ParseError(line_no, "table order must be positive");
      have_shape = true;
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!have_name) throw ParseError(line_no, "missing 'group' line");
  if (!have_shape) throw ParseError(line_no, "missing 'degree' or 'table' line");
  if (spec.kind == GroupSpec::Kind::Table && table_rows_read != spec.table_order) {
    throw ParseError(line_no, "table has " + std::to_string(table_rows_read) + " rows, expected " +
                                  std::to_string(spec.table_order));
  }
  return spec;
}

GroupSpec read_group_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group_spec(buf.str());
}

FiniteGroup permutation_group(std::string name, std::size_t degree,
                              const std::vector<std::vector<std::uint32_t>>& generators, std::size_t order_cap) {
  using Perm = std::vector<std::uint32_t>;
  for (const auto& g : generators) {
    if (g.size() != degree) throw InvalidInput("generator is not a permutation of the declared degree");
    std::vector<std::uint8_t> hit(degree, 0);
    for (auto p : g) {
      if (p >= degree || hit[p]) throw InvalidInput("generator is not a permutation of the declared degree");
      hit[p] = 1;
    }
  }
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::map<Perm, Elem> index;
  std::vector<Perm> elems{id};
  index.emplace(id, 0);
  auto product = [](const Perm& x, const Perm& y) {
    Perm z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = y[x[i]];
    return z;
  };
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      Perm z = product(elems[head], g);
      if (index.emplace(z, static_cast<Elem>(elems.size())).second) {
        elems.push_back(std::move(z));
        if (elems.size() > order_cap) {
          throw CapExceeded("permutation group " + name + " exceeds order cap " + std::to_string(order_cap));
        }
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(product(elems[a], elems[b]));
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elems) labels.push_back(cycle_notation(p));
  return FiniteGroup::from_table(std::move(name), n, std::move(table), std::move(labels), order_cap);
}

FiniteGroup load_group(const GroupSpec& spec, std::size_t order_cap) {
  if (spec.kind == GroupSpec::Kind::Permutation) {
    return permutation_group(spec.name, spec.degree, spec.generators, order_cap);
  }
  const std::size_t n = spec.table_order;
  if (n > order_cap) throw CapExceeded("table order exceeds cap " + std::to_string(order_cap));
  // Locate the identity and move it to index 0.
  std::size_t e = n;
  for (std::size_t a = 0; a < n && e == n; ++a) {
    bool left = true;
    for (std::size_t x = 0; x < n && left; ++x) left = spec.table[a * n + x] == x && spec.table[x * n + a] == x;
    if (left) e = a;
  }
  if (e == n) throw InvalidInput("table has no identity element");
  std::vector<Elem> relabel(n);
  for (std::size_t i = 0; i < n; ++i) relabel[i] = static_cast<Elem>(i);
  std::swap(relabel[0], relabel[e]);
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[relabel[a] * n + relabel[b]] = relabel[spec.table[a * n + b]];
    }
  }
  FiniteGroup g = FiniteGroup::from_table(spec.name, n, std::move(table), {}, order_cap);
  check_sampled_associativity(g);
  return g;
}

FiniteGroup load_group_file(const std::filesystem::path& path, std::size_t order_cap) {
  return load_group(read_group_spec(path), order_cap);
}

}  // namespace idemlab
