#include "vilenkin/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace vilenkin {

std::string format_double(double value) {
    if (!std::isfinite(value))
        throw NumericViolation("non-finite value in emitted output");
    char buf[40];
    // Shortest representation that parses back to the same double.
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
        if (std::strtod(buf, nullptr) == value)
            return buf;
    }
    return buf;
}

namespace {

void write_values_csv(std::ostream& out, const std::vector<Complex>& values,
                      const std::string& header) {
    out << header << "\n";
    for (std::size_t i = 0; i < values.size(); ++i)
        out << i << ',' << format_double(values[i].real()) << ','
            << format_double(values[i].imag()) << "\n";
}

nlohmann::json values_json(const RadixProfile& profile, const std::vector<Complex>& values) {
    nlohmann::json j;
    j["radices"] = profile.radices();
    j["resolution"] = profile.resolution();
    nlohmann::json arr = nlohmann::json::array();
    for (const Complex& v : values)
        arr.push_back({v.real(), v.imag()});
    j["values"] = std::move(arr);
    return j;
}

std::vector<Complex> parse_values(const nlohmann::json& j, const RadixProfile& profile) {
    const auto& arr = j.at("values");
    if (!arr.is_array() || static_cast<std::int64_t>(arr.size()) != profile.size())
        throw std::invalid_argument("value array length does not match profile size");
    std::vector<Complex> values;
    values.reserve(arr.size());
    for (const auto& entry : arr) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("values must be [re, im] pairs");
        const double re = entry[0].get<double>();
        const double im = entry[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im))
            throw std::invalid_argument("non-finite sample in input");
        values.emplace_back(re, im);
    }
    return values;
}

} // namespace

void write_grid_csv(std::ostream& out, const GridFunction& f, const std::string& header) {
    write_values_csv(out, f.samples, header);
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s, const std::string& header) {
    write_values_csv(out, s.coefficients, header);
}

void write_grid_json(std::ostream& out, const GridFunction& f) {
    out << values_json(f.profile, f.samples).dump() << "\n";
}

void write_spectrum_json(std::ostream& out, const Spectrum& s) {
    out << values_json(s.profile, s.coefficients).dump() << "\n";
}

GridFunction read_grid_json(std::istream& in) {
    nlohmann::json j;
    in >> j;
    const std::vector<int> radices = j.at("radices").get<std::vector<int>>();
    const std::size_t resolution = j.at("resolution").get<std::size_t>();
    RadixProfile profile(radices, resolution);
    if (resolution != radices.size())
        throw std::invalid_argument("resolution does not match radix list length");
    return GridFunction{profile, parse_values(j, profile)};
}

GridFunction read_grid_csv(std::istream& in, const RadixProfile& profile) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("empty CSV input");
    if (line != "index,re,im" && line != "index,value_re,value_im")
        throw std::invalid_argument("unrecognized CSV header: " + line);

    GridFunction out = GridFunction::zeros(profile);
    std::size_t count = 0;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream row(line);
        std::string field;
        std::getline(row, field, ',');
        const std::size_t index = static_cast<std::size_t>(std::stoll(field));
        std::getline(row, field, ',');
        const double re = std::stod(field);
        std::getline(row, field, ',');
        const double im = std::stod(field);
        if (index >= out.samples.size())
            throw std::invalid_argument("CSV index exceeds profile size");
        if (!std::isfinite(re) || !std::isfinite(im))
            throw std::invalid_argument("non-finite sample in input");
        out.samples[index] = Complex{re, im};
        ++count;
    }
    if (static_cast<std::int64_t>(count) != profile.size())
        throw std::invalid_argument("CSV row count does not match profile size");
    return out;
}

GridFunction load_grid(const std::string& path, const RadixProfile* profile_for_csv) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open input file: " + path);
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        return read_grid_json(in);
    if (profile_for_csv == nullptr)
        throw std::invalid_argument("CSV input requires an explicit radix profile");
    return read_grid_csv(in, *profile_for_csv);
}

Report::Report(std::vector<std::string> columns, std::vector<std::string> meta)
    : columns_(std::move(columns)), meta_(std::move(meta)) {}

void Report::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size())
        throw std::logic_error("report row width does not match columns");
    for (const Cell& cell : row)
        if (const double* d = std::get_if<double>(&cell); d != nullptr && !std::isfinite(*d))
            throw NumericViolation("non-finite value in report row");
    rows_.push_back(std::move(row));
}

namespace {

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string cell_text(const Cell& cell) {
    if (const auto* i = std::get_if<std::int64_t>(&cell))
        return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&cell))
        return format_double(*d);
    return std::get<std::string>(cell);
}

} // namespace

void Report::write_csv(std::ostream& out) const {
    for (const std::string& line : meta_)
        out << "# " << line << "\n";
    for (std::size_t c = 0; c < columns_.size(); ++c)
        out << (c == 0 ? "" : ",") << csv_quote(columns_[c]);
    out << "\n";
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c == 0 ? "" : ",") << csv_quote(cell_text(row[c]));
        out << "\n";
    }
}

void Report::write_jsonl(std::ostream& out) const {
    nlohmann::json meta;
    meta["meta"] = meta_;
    out << meta.dump() << "\n";
    for (const auto& row : rows_) {
        nlohmann::json j;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (const auto* i = std::get_if<std::int64_t>(&row[c]))
                j[columns_[c]] = *i;
            else if (const auto* d = std::get_if<double>(&row[c]))
                j[columns_[c]] = *d;
            else
                j[columns_[c]] = std::get<std::string>(row[c]);
        }
        out << j.dump() << "\n";
    }
}

void Report::write(const std::string& path, const std::string& format) const {
    const bool json = format == "json";
    if (!json && format != "csv")
        throw std::invalid_argument("unknown report format: " + format);
    if (path == "-" || path.empty()) {
        json ? write_jsonl(std::cout) : write_csv(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot open output file: " + path);
    json ? write_jsonl(out) : write_csv(out);
}

} // namespace vilenkin
