#include "coex/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "coex/errors.hpp"

namespace coex {

namespace {

std::string join(const std::vector<std::string>& cells) {
    std::string line;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i)
            line += ',';
        line += cells[i];
    }
    return line;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    cells.push_back(cur);
    return cells;
}

} // namespace

std::string CsvWriter::format(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& columns,
                     const std::vector<std::string>& comments)
    : out_(new std::ofstream(path)), columns_(columns.size()) {
    std::ofstream& out = *static_cast<std::ofstream*>(out_);
    if (!out)
        throw ConfigError("cannot write " + path);
    for (const std::string& c : comments)
        out << "# " << c << '\n';
    out << join(columns) << '\n';
}

CsvWriter::~CsvWriter() {
    delete static_cast<std::ofstream*>(out_);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_)
        throw ConfigError("csv row width mismatch");
    *static_cast<std::ofstream*>(out_) << join(cells) << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values)
        cells.push_back(format(v));
    row(cells);
}

CsvTable CsvTable::read(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open " + path);
    CsvTable t;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        if (t.header_.empty())
            t.header_ = split(line);
        else
            t.cells_.push_back(split(line));
    }
    if (t.header_.empty())
        throw ConfigError(path + ": no header row");
    for (size_t r = 0; r < t.cells_.size(); ++r)
        if (t.cells_[r].size() != t.header_.size()) {
            std::ostringstream os;
            os << path << ": row " << r + 1 << " has " << t.cells_[r].size()
               << " cells, header has " << t.header_.size();
            throw ConfigError(os.str());
        }
    return t;
}

bool CsvTable::has_column(const std::string& name) const {
    for (const std::string& h : header_)
        if (h == name)
            return true;
    return false;
}

const std::string& CsvTable::cell(size_t row, const std::string& column) const {
    for (size_t i = 0; i < header_.size(); ++i)
        if (header_[i] == column)
            return cells_.at(row).at(i);
    throw ConfigError("csv: no column \"" + column + "\"");
}

double CsvTable::num(size_t row, const std::string& column) const {
    const std::string& s = cell(row, column);
    try {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("csv: cell \"" + s + "\" in column " + column +
                          " is not a number");
    }
}

} // namespace coex
