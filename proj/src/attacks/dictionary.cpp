#include "wangauth/attacks/attacks.hpp"

#include <fstream>
#include <istream>
#include <stdexcept>

namespace wangauth::attacks {

std::vector<std::string> parse_dictionary(std::istream& in)
{
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty())
            words.push_back(std::move(line));
    }
    return words;
}

std::vector<std::string> load_dictionary(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open dictionary '" + path.string() + "'");
    return parse_dictionary(in);
}

} // namespace wangauth::attacks
