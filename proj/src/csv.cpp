#include "drops/csv.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <system_error>

#include "drops/params.hpp"

namespace drops {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void CsvWriter::comment(const std::string& line) {
    lines_.push_back("# " + line);
}

void CsvWriter::header(const std::vector<std::string>& names) {
    std::string line;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i)
            line += ',';
        line += names[i];
    }
    lines_.push_back(std::move(line));
}

void CsvWriter::row(const std::vector<double>& values) {
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            line += ',';
        line += format_double(values[i]);
    }
    lines_.push_back(std::move(line));
}

void CsvWriter::raw_row(const std::string& line) {
    lines_.push_back(line);
}

std::string CsvWriter::str() const {
    std::string all;
    for (const auto& line : lines_) {
        all += line;
        all += '\n';
    }
    return all;
}

void CsvWriter::write_file(const std::string& path) const {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path dir = target.parent_path();
    if (dir.empty())
        dir = ".";
    const fs::path tmp = dir / (target.filename().string() + ".tmp");

    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw ConfigError("cannot open output file: " + tmp.string());
        out << str();
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw NumericalError("failed writing output file: " + tmp.string());
        }
    }

    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ec2;
        fs::remove(tmp, ec2);
        throw NumericalError("failed to move output into place: " + target.string());
    }
}

} // namespace drops
