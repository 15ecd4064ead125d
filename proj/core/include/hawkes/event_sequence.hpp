#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace hawkes {

// A sorted realization of a multivariate point process on a half-open window
// [a, b). Types are 0-based in memory and 1-based in the CSV form.
struct EventSequence {
    struct Event {
        double time;
        int type;
    };

    std::vector<Event> events;  // nondecreasing in time
    double window_a = 0.0;
    double window_b = 0.0;
    // Ties at identical float times are possible but almost surely absent for
    // continuous models; flagged rather than rejected.
    bool has_ties = false;

    std::size_t size() const { return events.size(); }

    // Count of events with lo <= time < hi, all types.
    std::size_t count_in(double lo, double hi) const;
    std::size_t count_of_type(int type) const;

    // Sorts, drops nothing, validates containment in [a, b), flags ties.
    static EventSequence from_points(std::vector<Event> pts, double a, double b);

    // CSV with header `time,type`; times as decimal with 17 significant digits
    // (lossless double round trip), types 1-based.
    void to_csv(std::ostream& os) const;
    static EventSequence from_csv(std::istream& is, double a, double b);
};

}  // namespace hawkes
