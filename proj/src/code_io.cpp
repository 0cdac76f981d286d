#include "gfcodes/code_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace gfcodes {

Code read_code(std::istream& in) {
    std::vector<Word> words;
    std::string line;
    std::size_t line_number = 0;
    int n = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        Word w = Word::zeros(1);
        try {
            w = word_from_string(line);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_number) + ": " + e.what(), line_number);
        }
        if (n == 0) {
            n = w.length();
        } else if (w.length() != n) {
            throw ParseError("line " + std::to_string(line_number) + ": ragged file, expected " +
                                 std::to_string(n) + " characters, found " +
                                 std::to_string(w.length()),
                             line_number);
        }
        words.push_back(w);
    }
    if (words.empty()) throw ParseError("no codewords", line_number);
    return Code(n, std::move(words));
}

Code read_code_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string(), 0);
    return read_code(in);
}

void write_code(std::ostream& out, const Code& code, const std::vector<std::string>& comments) {
    for (const std::string& c : comments) out << "# " << c << '\n';
    for (const Word w : code.words()) out << w.to_string() << '\n';
}

}  // namespace gfcodes
