#include "plz/tuner.hpp"

#include <algorithm>

#include "plz/errors.hpp"
#include "plz/pipeline.hpp"

namespace plz {

PilotReport select_params(const std::vector<std::span<const std::uint8_t>>& fields,
                          int declared_width, const Params& base,
                          const TunerOptions& options) {
    if (fields.empty())
        throw validation_error("tuner requires at least one field");
    if (declared_width != 1 && declared_width != 2 && declared_width != 4)
        throw validation_error("declared_width must be 1, 2 or 4");

    Params pilot = base;
    pilot.symbol_width = declared_width;
    pilot = validate(pilot);

    PilotReport report;
    for (const auto& field : fields) {
        const std::size_t take = std::min(field.size(), options.pilot_cap);
        const auto sample = field.subspan(0, take);
        const std::vector<std::uint8_t> compressed =
            compress(sample, pilot, options.threads);
        const double ratio = compressed.empty()
                                 ? 1.0
                                 : double(sample.size()) / double(compressed.size());
        report.field_ratios.push_back(ratio);
        report.average += ratio;
    }
    report.average /= double(report.field_ratios.size());

    Params chosen = base;
    if (report.average < options.threshold) {
        chosen.symbol_width = 1;  // window left unchanged in the fallback
    } else {
        chosen.symbol_width = declared_width;
        chosen.window = std::min(255, base.window * declared_width);
    }
    report.chosen = validate(chosen);
    return report;
}

}  // namespace plz
