#include "superstring/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace superstring {

std::vector<Text> read_strings(std::istream& in) {
  std::vector<Text> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    for (unsigned char c : line) {
      if (c <= 0x20 || c >= 0x7f) {
        std::ostringstream msg;
        msg << "line " << number << ": invalid character 0x" << std::hex << static_cast<int>(c);
        throw InputError(msg.str());
      }
    }
    out.push_back(line);
  }
  if (in.bad()) throw InputError("read error");
  return out;
}

std::vector<Text> read_strings_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return read_strings(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_strings(std::ostream& out, std::span<const Text> strings, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  for (const auto& s : strings) out << s << '\n';
}

void write_strings_file(const std::filesystem::path& path, std::span<const Text> strings,
                        const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_strings(out, strings, comment);
  if (!out) throw InputError("write failed: " + path.string());
}

}  // namespace superstring
