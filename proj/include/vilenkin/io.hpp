#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "vilenkin/transform.hpp"

namespace vilenkin {

/// Thrown when a numerical invariant is violated while producing output
/// (e.g. a non-finite value in a report row). The CLI maps this to its
/// own exit code, distinct from configuration errors.
struct NumericViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shortest decimal form that round-trips a double exactly.
std::string format_double(double value);

// -- sample/coefficient arrays ------------------------------------------

/// CSV rows "index,re,im" under a header; `header` overrides the default
/// column names (kernel dumps use index,value_re,value_im).
void write_grid_csv(std::ostream& out, const GridFunction& f,
                    const std::string& header = "index,re,im");
void write_spectrum_csv(std::ostream& out, const Spectrum& s,
                        const std::string& header = "index,re,im");

/// JSON object {"radices": [...], "resolution": R, "values": [[re,im],...]}.
void write_grid_json(std::ostream& out, const GridFunction& f);
void write_spectrum_json(std::ostream& out, const Spectrum& s);

/// Loaders validate the value count against the profile and reject
/// non-finite entries. The JSON loader reads the schema written above;
/// the CSV loader accepts either header form.
GridFunction read_grid_json(std::istream& in);
GridFunction read_grid_csv(std::istream& in, const RadixProfile& profile);

/// Reads a grid (or coefficient array) from a file, dispatching on the
/// ".json" suffix, otherwise CSV (CSV requires the profile).
GridFunction load_grid(const std::string& path, const RadixProfile* profile_for_csv);

// -- experiment reports --------------------------------------------------

using Cell = std::variant<std::int64_t, double, std::string>;

/// Column-named table with comment metadata, written as RFC-4180 CSV or
/// as JSON lines (first line is a meta object so every line stays valid
/// JSON). Cells are rendered with round-trip double formatting, so a
/// fixed configuration reproduces byte-identical files.
class Report {
  public:
    Report(std::vector<std::string> columns, std::vector<std::string> meta);

    void add_row(std::vector<Cell> row);
    std::size_t rows() const { return rows_.size(); }
    const std::vector<Cell>& row(std::size_t i) const { return rows_[i]; }
    const std::vector<std::string>& columns() const { return columns_; }

    void write_csv(std::ostream& out) const;
    void write_jsonl(std::ostream& out) const;
    /// Dispatches on format ("csv" or "json"); path "-" writes to stdout.
    void write(const std::string& path, const std::string& format) const;

  private:
    std::vector<std::string> columns_;
    std::vector<std::string> meta_;
    std::vector<std::vector<Cell>> rows_;
};

} // namespace vilenkin
