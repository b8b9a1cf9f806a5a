#include "jlab/family.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "jlab/errors.hpp"

namespace jlab {

SetFamily::SetFamily(int n, int k, std::vector<KSet> sets)
    : n_(n), k_(k), sets_(std::move(sets)) {
    require(n >= 1, "family: n must be positive");
    require(k >= 0 && k <= n, "family: need 0 <= k <= n");
    for (const auto& s : sets_) {
        require(s.n() == n_ && s.k() == k_, "family: member has wrong ground set or size");
    }
    // reject duplicates; order of members is otherwise preserved
    std::vector<std::uint64_t> rk;
    rk.reserve(sets_.size());
    for (const auto& s : sets_) rk.push_back(rank_colex(s));
    std::sort(rk.begin(), rk.end());
    require(std::adjacent_find(rk.begin(), rk.end()) == rk.end(),
            "family: duplicate member");
}

std::vector<std::uint64_t> SetFamily::ranks() const {
    std::vector<std::uint64_t> rk;
    rk.reserve(sets_.size());
    for (const auto& s : sets_) rk.push_back(rank_colex(s));
    std::sort(rk.begin(), rk.end());
    return rk;
}

void write_family(std::ostream& os, const SetFamily& f) {
    os << f.n() << ' ' << f.k() << ' ' << f.size() << '\n';
    for (const auto& s : f.sets()) {
        const auto& e = s.elements();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) os << ' ';
            os << e[i];
        }
        os << '\n';
    }
}

std::string family_to_string(const SetFamily& f) {
    std::ostringstream os;
    write_family(os, f);
    return os.str();
}

SetFamily read_family(std::istream& is) {
    std::string line;
    require(static_cast<bool>(std::getline(is, line)), "family file: missing header");
    std::istringstream hdr(line);
    long long n = -1, k = -1, count = -1;
    require(static_cast<bool>(hdr >> n >> k >> count), "family file: malformed header");
    std::string extra;
    require(!(hdr >> extra), "family file: trailing tokens in header");
    require(n >= 1 && k >= 0 && k <= n && count >= 0, "family file: invalid header values");

    std::vector<KSet> sets;
    sets.reserve(static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i) {
        require(static_cast<bool>(std::getline(is, line)),
                "family file: fewer sets than header count");
        std::istringstream ls(line);
        std::vector<int> elems;
        int e;
        while (ls >> e) elems.push_back(e);
        require(ls.eof(), "family file: non-integer token in set line");
        require(static_cast<long long>(elems.size()) == k,
                "family file: set line has wrong number of elements");
        sets.emplace_back(std::move(elems), static_cast<int>(n));
    }
    return SetFamily(static_cast<int>(n), static_cast<int>(k), std::move(sets));
}

SetFamily read_family_file(const std::string& path) {
    std::ifstream is(path);
    require(static_cast<bool>(is), "cannot open family file: " + path);
    return read_family(is);
}

void write_family_file(const std::string& path, const SetFamily& f) {
    std::ofstream os(path, std::ios::binary); // binary keeps LF on all platforms
    require(static_cast<bool>(os), "cannot write family file: " + path);
    write_family(os, f);
}

} // namespace jlab
