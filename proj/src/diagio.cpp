#include <sstream>

#include "btinv/diagram.hpp"

// Structured text format for diagrams and series. Field order is stable and
// the round-trip is bit-exact.

namespace btinv {

namespace {

std::string csv(const std::vector<int>& v) {
    if (v.empty()) return "-";
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

std::vector<int> uncsv(const std::string& s) {
    std::vector<int> v;
    if (s == "-") return v;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) v.push_back(std::stoi(tok));
    return v;
}

void write_diagram_body(std::ostream& os, const NDiagram& d) {
    const Skeleton& s = d.skeleton();
    auto w = [](const std::vector<int>& v) {
        std::string x = word_str(false, v);
        return x.empty() ? std::string("(empty)") : x;
    };
    os << "skeleton " << (s.pole ? 1 : 0) << " " << w(s.source) << " " << w(s.target) << "\n";
    for (int c = 0; c < (int)s.comps.size(); ++c) {
        const SkelComp& sc = s.comps[c];
        os << "comp ";
        if (sc.circle)
            os << "circle - - - -";
        else
            os << "interval " << sc.begin.side << " " << sc.begin.pos << " " << sc.finish.side
               << " " << sc.finish.pos;
        os << " res " << d.res[c] << " ev " << csv(d.ev[c]) << " lab " << csv(d.lab[c]) << "\n";
    }
    os << "pole_ev " << csv(d.pole_ev) << "\n";
}

NDiagram read_diagram_body(std::istream& is, int N) {
    std::string tok;
    if (!(is >> tok) || tok != "skeleton") throw DiagramError("diagram file: expected skeleton");
    int pole;
    std::string src, tgt;
    is >> pole >> src >> tgt;
    Skeleton s;
    s.pole = pole != 0;
    s.source = word_parse(src == "(empty)" ? "" : src, nullptr);
    s.target = word_parse(tgt == "(empty)" ? "" : tgt, nullptr);
    NDiagram d;
    d.N = N;
    int maxchord = -1;
    while (is >> tok) {
        if (tok == "comp") {
            std::string kind, b1, b2, f1, f2;
            is >> kind >> b1 >> b2 >> f1 >> f2;
            SkelComp sc;
            if (kind == "circle")
                sc.circle = true;
            else {
                sc.circle = false;
                sc.begin = {std::stoi(b1), std::stoi(b2)};
                sc.finish = {std::stoi(f1), std::stoi(f2)};
            }
            std::string kw;
            int res;
            std::string evs, labs;
            is >> kw >> res;  // res
            is >> kw >> evs;  // ev
            is >> kw >> labs; // lab
            s.comps.push_back(sc);
            d.ev.push_back(uncsv(evs));
            d.lab.push_back(uncsv(labs));
            d.res.push_back(res);
            for (int ch : d.ev.back()) maxchord = std::max(maxchord, ch);
        } else if (tok == "pole_ev") {
            std::string evs;
            is >> evs;
            d.pole_ev = uncsv(evs);
            for (int ch : d.pole_ev) maxchord = std::max(maxchord, ch);
            break;
        } else
            throw DiagramError("diagram file: unexpected token " + tok);
    }
    d.deg = maxchord + 1;
    d.skel = skel_id(s);
    d.canonicalize();
    return d;
}

}  // namespace

std::string diagram_file_str(const NDiagram& d) {
    std::ostringstream os;
    os << "ndiagram v1\nN " << d.N << "\n";
    write_diagram_body(os, d);
    os << "end\n";
    return os.str();
}

NDiagram diagram_file_parse(const std::string& text) {
    std::istringstream is(text);
    std::string tok, ver;
    is >> tok >> ver;
    if (tok != "ndiagram") throw DiagramError("not a diagram file");
    int N;
    is >> tok >> N;
    if (tok != "N") throw DiagramError("diagram file: expected N");
    return read_diagram_body(is, N);
}

std::string series_file_str(const DiagramSeries& s) {
    std::ostringstream os;
    os << "dseries v1\nN " << s.N << " cap " << s.cap << "\n";
    for (int d = 0; d <= s.cap; ++d)
        for (auto& [k, pc] : s.deg[d]) {
            os << "term deg " << d << " coeff " << rat_str(pc.second) << "\n";
            write_diagram_body(os, pc.first);
        }
    os << "end\n";
    return os.str();
}

DiagramSeries series_file_parse(const std::string& text) {
    std::istringstream is(text);
    std::string tok, ver;
    is >> tok >> ver;
    if (tok != "dseries") throw DiagramError("not a series file");
    int N, cap;
    is >> tok >> N >> tok >> cap;
    DiagramSeries out;
    bool init = false;
    while (is >> tok) {
        if (tok == "end") break;
        if (tok != "term") throw DiagramError("series file: expected term");
        int d;
        std::string cs;
        is >> tok >> d >> tok >> cs;
        NDiagram diag = read_diagram_body(is, N);
        if (!init) {
            out = DiagramSeries(diag.skel, N, cap);
            init = true;
        }
        out.add(diag, rat_parse(cs));
    }
    if (!init) out = DiagramSeries(-1, N, cap);
    return out;
}

}  // namespace btinv
