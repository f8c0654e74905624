#ifndef COEX_CSV_HPP
#define COEX_CSV_HPP

#include <string>
#include <vector>

namespace coex {

// Minimal CSV with "#" comment lines and %.12g numbers: enough precision
// to round-trip the model outputs, short enough to stay readable, and
// byte-deterministic for a given input.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& columns,
              const std::vector<std::string>& comments);
    ~CsvWriter();

    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    void row(const std::vector<double>& values);
    void row(const std::vector<std::string>& cells);

    static std::string format(double v); // %.12g

private:
    void* out_; // std::ofstream, kept out of the header
    size_t columns_;
};

// Reader for the same dialect (comments skipped, first data line is the
// header). Cells stay strings; num() parses on demand.
class CsvTable {
public:
    static CsvTable read(const std::string& path);

    size_t rows() const { return cells_.size(); }
    bool has_column(const std::string& name) const;
    const std::string& cell(size_t row, const std::string& column) const;
    double num(size_t row, const std::string& column) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> cells_;
};

} // namespace coex

#endif
