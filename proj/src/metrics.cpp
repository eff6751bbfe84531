#include "rssl/metrics.hpp"

#include <cstdio>

#include "rssl/errors.hpp"

namespace rssl {

SegMetrics confusion(const BinaryImage& pred, const BinaryImage& gt) {
    if (pred.height != gt.height || pred.width != gt.width)
        throw DimensionError("confusion: image dimensions differ");
    SegMetrics m;
    for (size_t i = 0; i < pred.data.size(); ++i) {
        const bool p = pred.data[i] != 0, g = gt.data[i] != 0;
        if (p && g)
            ++m.tp;
        else if (p && !g)
            ++m.fp;
        else if (!p && g)
            ++m.fn;
        else
            ++m.tn;
    }
    m.precision = m.tp + m.fp > 0 ? static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fp) : 0.0;
    m.recall = m.tp + m.fn > 0 ? static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fn) : 0.0;
    m.f1 = f1_of(m.precision, m.recall);
    return m;
}

double f1_of(double precision, double recall) {
    if (precision < 0.0 || precision > 1.0 || recall < 0.0 || recall > 1.0)
        throw InvalidParameterError("f1_of: inputs must lie in [0, 1]");
    const double denom = precision + recall;
    return denom > 0.0 ? 2.0 * precision * recall / denom : 0.0;
}

std::string report_csv(const std::vector<std::pair<std::string, SegMetrics>>& rows) {
    std::string out = "algorithm,precision,recall,f1\n";
    char line[160];
    for (const auto& [name, m] : rows) {
        std::snprintf(line, sizeof(line), "%s,%.4f,%.4f,%.4f\n", name.c_str(), m.precision, m.recall, m.f1);
        out += line;
    }
    return out;
}

} // namespace rssl
