#pragma once

#include <string>

#include "meancert/proof.hpp"

namespace meancert {

// JSON document with one record per certificate:
// {id, paper_ref, lower, upper, sign, precision_bits, status}.
// The paper_ref field carries the mathematical claim the certificate settles.
std::string certification_report_json(const CertificationRun& run);

// Writes the document to a file; throws std::runtime_error on I/O failure.
void write_certification_report(const CertificationRun& run,
                                const std::string& path);

}  // namespace meancert
