#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "jlab/kset.hpp"

namespace jlab {

/// A duplicate-free family of k-sets over [1, n].
class SetFamily {
public:
    SetFamily(int n, int k, std::vector<KSet> sets);

    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t size() const { return sets_.size(); }
    const std::vector<KSet>& sets() const { return sets_; }
    const KSet& operator[](std::size_t i) const { return sets_[i]; }

    /// Members as colex ranks, sorted ascending.
    std::vector<std::uint64_t> ranks() const;

private:
    int n_, k_;
    std::vector<KSet> sets_;
};

// Family file format, used repo-wide. UTF-8 text, first line "n k count",
// then one set per line as space-separated increasing integers. LF line
// endings, no trailing whitespace.
void write_family(std::ostream& os, const SetFamily& f);
std::string family_to_string(const SetFamily& f);
SetFamily read_family(std::istream& is);
SetFamily read_family_file(const std::string& path);
void write_family_file(const std::string& path, const SetFamily& f);

} // namespace jlab
