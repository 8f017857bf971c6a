#ifndef CODATA_SUITE_HPP
#define CODATA_SUITE_HPP

#include "codata/gen.hpp"
#include "codata/report.hpp"

namespace codata {

/// Runs every registered (law, instance) pair at the configured depth and
/// sample count.  Deterministic: identical config yields an identical
/// report.  With cfg.mutations set, the documented sabotaged instances are
/// included; those entries (instance ids prefixed "mut.") are expected to
/// fail.
LawReport run_all_laws(const GenConfig& cfg);

/// True when the report is clean: no failures apart from the expected
/// mutation failures, and every mutation entry that must fail does fail.
bool report_clean(const LawReport& report);

}  // namespace codata

#endif
