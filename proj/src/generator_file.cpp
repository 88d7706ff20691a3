#include "simdiag/generator_file.hpp"

#include <fstream>
#include <sstream>

#include "simdiag/errors.hpp"

namespace simdiag {

std::vector<Permutation> parse_generator_text(const std::string& text,
                                              const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);

    std::string where = origin + ":" + std::to_string(lineno);
    if (!have_degree) {
      std::istringstream ls(line);
      std::string kw;
      long n = -1;
      ls >> kw >> n;
      if (kw != "degree" || n <= 0 || n > 65535)
        fail(ErrorKind::Parse, where + ": expected 'degree <n>' first");
      degree = static_cast<std::size_t>(n);
      have_degree = true;
      continue;
    }
    if (line.rfind("img", 0) == 0) {
      std::istringstream ls(line.substr(3));
      std::vector<Point> img;
      long v;
      while (ls >> v) {
        if (v < 0 || static_cast<std::size_t>(v) >= degree)
          fail(ErrorKind::Parse, where + ": image out of range");
        img.push_back(static_cast<Point>(v));
      }
      if (img.size() != degree) fail(ErrorKind::Parse, where + ": image list has wrong length");
      try {
        gens.emplace_back(std::move(img));
      } catch (const Error&) {
        fail(ErrorKind::Parse, where + ": image list is not a bijection");
      }
    } else {
      try {
        gens.push_back(Permutation::from_cycles(degree, line));
      } catch (const Error& err) {
        fail(ErrorKind::Parse, where + ": " + err.what());
      }
    }
  }
  if (!have_degree) fail(ErrorKind::Parse, origin + ": missing 'degree <n>' line");
  if (gens.empty()) fail(ErrorKind::Parse, origin + ": no generators");
  return gens;
}

std::vector<Permutation> parse_generator_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::Parse, "cannot open generator file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_generator_text(ss.str(), path);
}

}  // namespace simdiag
