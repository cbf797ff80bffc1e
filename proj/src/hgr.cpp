#include "hypertrans/hgr.hpp"

#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "hypertrans/error.hpp"

namespace hypertrans {

std::string write_hgr(const Hypergraph& g) {
  std::string out = std::to_string(g.k()) + ' ' + std::to_string(g.m()) + ' ' + std::to_string(g.n()) + '\n';
  for (const auto& e : g.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(e[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<long long> parse_numbers(const std::string& line, std::size_t line_no) {
  std::istringstream in(line);
  std::vector<long long> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad integer '" + token + "'");
    }
    values.push_back(value);
  }
  return values;
}

}  // namespace

Hypergraph parse_hgr(std::string_view text) {
  if (text.empty() || text.back() != '\n') throw Error(Errc::ParseError, "missing trailing newline");
  std::vector<std::vector<long long>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::size_t> row_lines;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    rows.push_back(parse_numbers(line, line_no));
    row_lines.push_back(line_no);
  }
  if (rows.empty() || rows[0].size() != 3) throw Error(Errc::ParseError, "header must be 'k m n'");
  const long long k = rows[0][0], m = rows[0][1], n = rows[0][2];
  if (k < 2 || m < 0 || n < 1 || k > 1 << 15 || n > 1 << 20) {
    throw Error(Errc::ParseError, "header values out of range");
  }
  if (static_cast<long long>(rows.size()) - 1 != m) {
    throw Error(Errc::ParseError, "header announces " + std::to_string(m) + " edges, found " +
                                      std::to_string(rows.size() - 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (static_cast<long long>(rows[i].size()) != k) {
      throw Error(Errc::ParseError, "line " + std::to_string(row_lines[i]) + ": expected " +
                                        std::to_string(k) + " vertices");
    }
    Edge e;
    for (long long v : rows[i]) {
      if (v < 0 || v >= n) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
      e.push_back(static_cast<Vertex>(v));
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph::build(static_cast<int>(k), static_cast<int>(n), std::move(edges));
}

Hypergraph read_hgr_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_hgr(buffer.str());
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot open " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::system_error(ec, "cannot rename onto " + path.string());
  }
}

}  // namespace hypertrans
