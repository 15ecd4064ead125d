#include "hawkes/event_sequence.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hawkes {

std::size_t EventSequence::count_in(double lo, double hi) const {
    if (!(lo <= hi)) throw std::invalid_argument("interval must satisfy lo <= hi");
    auto first = std::lower_bound(events.begin(), events.end(), lo,
                                  [](const Event& e, double t) { return e.time < t; });
    auto last = std::lower_bound(first, events.end(), hi,
                                 [](const Event& e, double t) { return e.time < t; });
    return static_cast<std::size_t>(last - first);
}

std::size_t EventSequence::count_of_type(int type) const {
    std::size_t n = 0;
    for (const Event& e : events)
        if (e.type == type) ++n;
    return n;
}

EventSequence EventSequence::from_points(std::vector<Event> pts, double a, double b) {
    if (!(a < b)) throw std::invalid_argument("window must satisfy a < b");
    EventSequence out;
    out.window_a = a;
    out.window_b = b;
    // stable_sort keeps insertion order among tied times, so output is a pure
    // function of the input order.
    std::stable_sort(pts.begin(), pts.end(),
                     [](const Event& x, const Event& y) { return x.time < y.time; });
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!(pts[i].time >= a && pts[i].time < b))
            throw std::invalid_argument("event time outside window");
        if (i > 0 && pts[i].time == pts[i - 1].time) out.has_ties = true;
    }
    out.events = std::move(pts);
    return out;
}

void EventSequence::to_csv(std::ostream& os) const {
    os << "time,type\n";
    char buf[64];
    for (const Event& e : events) {
        std::snprintf(buf, sizeof(buf), "%.17g", e.time);
        os << buf << ',' << (e.type + 1) << '\n';
    }
}

EventSequence EventSequence::from_csv(std::istream& is, double a, double b) {
    std::string line;
    if (!std::getline(is, line) || line != "time,type")
        throw std::invalid_argument("expected CSV header `time,type`");
    std::vector<Event> pts;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("malformed CSV row: " + line);
        Event e;
        e.time = std::stod(line.substr(0, comma));
        e.type = std::stoi(line.substr(comma + 1)) - 1;
        if (e.type < 0) throw std::invalid_argument("type must be >= 1 in CSV");
        pts.push_back(e);
    }
    return from_points(std::move(pts), a, b);
}

}  // namespace hawkes
