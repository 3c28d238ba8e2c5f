#include "s2tlab/textio.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace s2tlab {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

Perm parse_cycles(const std::string& text, int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i)
    img[i] = i;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos >= text.size())
      break;
    if (text[pos] != '(')
      throw std::invalid_argument("expected '(' in cycle notation: " + text);
    size_t close = text.find(')', pos);
    if (close == std::string::npos)
      throw std::invalid_argument("unterminated cycle: " + text);
    std::istringstream cyc(text.substr(pos + 1, close - pos - 1));
    std::vector<int> pts;
    int v;
    while (cyc >> v)
      pts.push_back(v);
    if (pts.size() == 1)
      throw std::invalid_argument("singleton cycle: " + text);
    for (size_t i = 0; i < pts.size(); ++i) {
      int from = pts[i], to = pts[(i + 1) % pts.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw std::invalid_argument("cycle point out of range: " + text);
      if (img[from] != from)
        throw std::invalid_argument("point repeated across cycles: " + text);
      img[from] = to;
    }
    pos = close + 1;
  }
  return Perm(img);
}

Perm parse_image_list(const std::string& text, int degree) {
  std::vector<int> img;
  std::string inner = text;
  auto l = inner.find('['), r = inner.rfind(']');
  if (l == std::string::npos || r == std::string::npos || r < l)
    throw std::invalid_argument("malformed image list: " + text);
  inner = inner.substr(l + 1, r - l - 1);
  std::istringstream is(inner);
  std::string tok;
  while (std::getline(is, tok, ','))
    img.push_back(std::stoi(tok));
  if (static_cast<int>(img.size()) != degree)
    throw std::invalid_argument("image list has wrong length: " + text);
  return Perm(img);
}

} // namespace

GeneratorFile parse_group_text(std::istream& in) {
  GeneratorFile out;
  std::string line;
  bool have_degree = false;
  while (std::getline(in, line)) {
    line = strip_comment(line);
    if (blank(line))
      continue;
    if (!have_degree) {
      std::istringstream is(line);
      std::string kw;
      if (!(is >> kw >> out.degree) || kw != "degree" || out.degree < 1)
        throw std::invalid_argument("expected 'degree n' header, got: " + line);
      have_degree = true;
      continue;
    }
    size_t first = line.find_first_not_of(" \t");
    if (line[first] == '(' || line.substr(first, 2) == "()")
      out.generators.push_back(parse_cycles(line, out.degree));
    else if (line[first] == '[')
      out.generators.push_back(parse_image_list(line, out.degree));
    else
      throw std::invalid_argument("unrecognized generator line: " + line);
  }
  if (!have_degree)
    throw std::invalid_argument("missing 'degree n' header");
  return out;
}

GeneratorFile parse_group_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open group file: " + path);
  return parse_group_text(in);
}

std::string write_group_text(int degree, const std::vector<Perm>& generators) {
  std::ostringstream os;
  os << "degree " << degree << "\n";
  for (const Perm& g : generators) {
    if (g.is_identity()) {
      os << '[';
      for (int x = 0; x < degree; ++x)
        os << (x ? "," : "") << x;
      os << "]\n";
    } else {
      os << to_cycle_string(g) << "\n";
    }
  }
  return os.str();
}

std::string write_nearfield_dump(const NearField& nf) {
  std::ostringstream os;
  os << "order " << nf.order << "\n";
  for (const auto* table : {&nf.add, &nf.mul})
    for (const auto& row : *table) {
      for (size_t i = 0; i < row.size(); ++i)
        os << (i ? " " : "") << row[i];
      os << "\n";
    }
  return os.str();
}

NearField parse_nearfield_dump(std::istream& in) {
  NearField nf;
  std::string kw;
  if (!(in >> kw >> nf.order) || kw != "order" || nf.order < 2)
    throw std::invalid_argument("expected 'order q' header");
  const int q = nf.order;
  for (auto* table : {&nf.add, &nf.mul}) {
    table->assign(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        if (!(in >> (*table)[a][b]))
          throw std::invalid_argument("near-field dump truncated");
  }
  nf.label = "dump(" + std::to_string(q) + ")";
  return nf;
}

} // namespace s2tlab
