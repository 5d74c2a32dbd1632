// Copyright 2026 The decent-meter Authors. Licensed under the Apache
// License, Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "decent/report.hpp"

namespace decent {

std::string impact_to_csv(const ImpactMatrix& impacts) {
    std::string out = "account";
    for (std::size_t d = 0; d < impacts.days(); ++d)
        out += ",d" + std::to_string(d);
    out += '\n';
    for (std::size_t r = 0; r < impacts.rows(); ++r) {
        out += impacts.individuals()[r].str();
        for (std::size_t d = 0; d < impacts.days(); ++d)
            out += "," + impacts.at(r, d).to_string();
        out += '\n';
    }
    return out;
}

std::string mt_to_csv(const MtSeries& series) {
    std::string out = "day,f\n";
    for (std::size_t d = 0; d < series.values.size(); ++d)
        out += std::to_string(d) + "," + std::to_string(series.values[d]) + "\n";
    return out;
}

namespace {

template <typename Matrix>
std::string bucket_csv(const std::vector<AccountId>& producers, std::size_t buckets,
                       const Matrix& at) {
    std::string out = "producer";
    for (std::size_t b = 0; b < buckets; ++b)
        out += ",b" + std::to_string(b);
    out += '\n';
    for (std::size_t r = 0; r < producers.size(); ++r) {
        out += producers[r].str();
        for (std::size_t b = 0; b < buckets; ++b)
            out += "," + at(r, b).to_string();
        out += '\n';
    }
    return out;
}

} // namespace

std::string production_to_csv(const ProductionMatrix& blocks) {
    return bucket_csv(blocks.producers(), blocks.buckets(),
                      [&](std::size_t r, std::size_t b) { return blocks.at(r, b); });
}

std::string rates_to_csv(const NormalizedRateMatrix& rates) {
    return bucket_csv(rates.producers, rates.buckets,
                      [&](std::size_t r, std::size_t b) { return rates.at(r, b); });
}

std::string capture_cost_to_csv(const std::vector<CaptureCostRow>& rows) {
    std::string out = "day,governance,full\n";
    for (const auto& row : rows) {
        out += std::to_string(row.day) + ",";
        if (row.governance)
            out += row.governance->to_string();
        out += "," + row.full.to_string() + "\n";
    }
    return out;
}

std::string validation_report_to_jsonl(const EventLog& log, const ValidationReport& report) {
    std::string out;
    for (const auto& v : report) {
        const auto& ev = log.events.at(v.event_index);
        out += "{\"event\":" + std::to_string(v.event_index) + ",\"day\":" +
               std::to_string(ev.day) + ",\"seq\":" + std::to_string(ev.seq) + ",\"kind\":\"" +
               std::string(to_string(v.kind)) + "\"}\n";
    }
    return out;
}

} // namespace decent
