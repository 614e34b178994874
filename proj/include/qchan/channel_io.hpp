#pragma once

#include <string>

#include "qchan/channel.hpp"

namespace qchan {

// Channel document: JSON with fields name, dim_in, dim_out, kraus.
// kraus is a list of matrices, a matrix is a list of rows, an entry is a
// pair [re, im]. Parsing round-trips serialize_channel bit-exactly.
std::string serialize_channel(const KrausChannel& ch);

struct ParsedChannel {
    KrausChannel channel;
    double cptp_defect = 0.0;
    bool forced = false;  // accepted above tolerance because force was set
};

ParsedChannel parse_channel(const std::string& text, double cptp_tol = kEpsCptp,
                            bool force = false);

// Density operator document: JSON with fields dim, matrix (list of rows of
// [re, im] pairs) and an optional name.
std::string serialize_state(const DensityOperator& rho, const std::string& name = "");
DensityOperator parse_state(const std::string& text);

}  // namespace qchan
