#pragma once

#include <string>
#include <vector>

namespace drops {

/// Format a double with the shortest digit string that round-trips.
std::string format_double(double v);

/// Collects comment lines, a header, and rows, then writes the file
/// atomically (temp file in the same directory, then rename), so a
/// failed run never leaves a truncated CSV behind.
class CsvWriter {
  public:
    void comment(const std::string& line); ///< emitted as "# line"
    void header(const std::vector<std::string>& names);
    void row(const std::vector<double>& values);
    void raw_row(const std::string& line); ///< preformatted (footers etc.)

    /// Render everything to one string (what write_file would emit).
    std::string str() const;

    void write_file(const std::string& path) const;

  private:
    std::vector<std::string> lines_;
};

} // namespace drops
