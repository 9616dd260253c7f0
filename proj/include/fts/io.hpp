#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "fts/evaluation.hpp"
#include "fts/model.hpp"
#include "fts/selection.hpp"

namespace fts {

/// 17 significant digits: enough to round-trip any double exactly.
inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    return out;
}

inline void write_series_csv(std::ostream& out, const TimeSeries& series) {
    out << "k,x\n";
    for (std::size_t k = 0; k < series.size(); ++k)
        out << k << ',' << format_double(series.values[k]) << '\n';
}

inline void write_acf_csv(std::ostream& out, const AcfResult& res) {
    out << "lag,correlation,significance_bound\n";
    for (std::size_t lag = 0; lag < res.correlations.size(); ++lag)
        out << lag << ',' << format_double(res.correlations[lag]) << ','
            << format_double(res.significance_bound) << '\n';
}

inline void write_bifurcation_csv(std::ostream& out, const std::vector<BifurcationPoint>& pts) {
    out << "r,x\n";
    for (const auto& p : pts)
        out << format_double(p.r) << ',' << format_double(p.x) << '\n';
}

inline void write_partition_csv(std::ostream& out, const PartitionScheme& scheme) {
    out << "index,a,b\n";
    for (std::size_t i = 0; i < scheme.n(); ++i)
        out << i << ',' << format_double(scheme.intervals[i].a) << ','
            << format_double(scheme.intervals[i].b) << '\n';
}

inline void write_aic_curve_csv(std::ostream& out, const AicSelection& sel) {
    out << "n,aic\n";
    for (const auto& p : sel.curve)
        out << p.n_intervals << ',' << format_double(p.aic_value) << '\n';
}

inline void write_report_csv(std::ostream& out, const ExperimentReport& report) {
    out << "sweep_var,sweep_value,model,mse,variance,n_intervals,fallbacks\n";
    for (const auto& row : report.rows)
        out << row.sweep_var << ',' << format_double(row.sweep_value) << ','
            << model_name(row.model) << ',' << format_double(row.summary.mse) << ','
            << format_double(row.summary.variance) << ',' << row.summary.n_intervals << ','
            << row.summary.n_fallbacks << '\n';
}

inline void write_report_config(std::ostream& out, const ExperimentReport& report) {
    out << "experiment: " << report.name << '\n';
    for (const auto& [key, value] : report.config)
        out << key << ": " << value << '\n';
    for (const auto& [key, value] : report.annotations)
        out << key << ": " << format_double(value) << '\n';
}

/// Model serialization: [partition], [groups] and [relation] CSV blocks.
/// Values carry round-trip precision, so a reloaded model forecasts
/// bit-identically.
inline void save_model(std::ostream& out, const FtsModel& model) {
    out << "[partition]\n";
    write_partition_csv(out, model.scheme);
    out << "[groups]\n";
    out << "lhs,rhs\n";
    for (const auto& [lhs, rhs_set] : model.groups)
        for (std::size_t rhs : rhs_set)
            out << lhs << ',' << rhs << '\n';
    out << "[relation]\n";
    for (const auto& row : model.relation) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? "," : "") << format_double(row[j]);
        out << '\n';
    }
}

inline void save_model(const std::string& path, const FtsModel& model) {
    auto out = open_output(path);
    save_model(out, model);
}

inline FtsModel load_model(std::istream& in) {
    FtsModel model;
    std::string line;
    enum class Section { none, partition, groups, relation } section = Section::none;
    bool header_pending = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line == "[partition]") { section = Section::partition; header_pending = true; continue; }
        if (line == "[groups]")    { section = Section::groups;    header_pending = true; continue; }
        if (line == "[relation]")  { section = Section::relation;  continue; }
        if (header_pending) { header_pending = false; continue; }

        std::istringstream fields(line);
        std::string field;
        std::vector<std::string> parts;
        while (std::getline(fields, field, ',')) parts.push_back(field);

        switch (section) {
            case Section::partition:
                if (parts.size() != 3)
                    throw std::runtime_error("load_model: malformed partition row: " + line);
                model.scheme.intervals.push_back({std::stod(parts[1]), std::stod(parts[2])});
                break;
            case Section::groups:
                if (parts.size() != 2)
                    throw std::runtime_error("load_model: malformed group row: " + line);
                model.groups[std::stoul(parts[0])].push_back(std::stoul(parts[1]));
                break;
            case Section::relation: {
                std::vector<double> row;
                row.reserve(parts.size());
                for (const auto& p : parts) row.push_back(std::stod(p));
                model.relation.push_back(std::move(row));
                break;
            }
            case Section::none:
                throw std::runtime_error("load_model: data before any section header");
        }
    }
    if (model.scheme.intervals.empty())
        throw std::runtime_error("load_model: no partition section");
    if (model.relation.size() != model.scheme.intervals.size())
        throw std::runtime_error("load_model: relation size does not match partition");
    model.scheme.universe = {model.scheme.intervals.front().a, model.scheme.intervals.back().b};
    model.midpoints = model.scheme.midpoints();
    return model;
}

inline FtsModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open model file: " + path);
    return load_model(in);
}

}  // namespace fts
