#include "rjc/jsonout.hpp"

#include "rjc/parse.hpp"

namespace rjc {

namespace {

ordered_json box_json(const WitnessBox& w) {
    return ordered_json{{"x", {w.xlo.to_string(), w.xhi.to_string()}},
                        {"y", {w.ylo.to_string(), w.yhi.to_string()}},
                        {"how", w.how}};
}

ordered_json family_json(const Family& f) {
    ordered_json j;
    j["family"] = f.id;
    if (f.id == 2 || f.id == 4) j["a02"] = f.a02.to_string();
    return j;
}

}  // namespace

ordered_json json_classify(const BPoly& p, const Verdict& v) {
    ordered_json j;
    j["command"] = "classify";
    j["input"] = print_poly(p);
    switch (v.tag) {
        case Verdict::Tag::NotSubmersion:
            j["verdict"] = "NotSubmersion";
            j["witness"] = box_json(*v.witness);
            break;
        case Verdict::Tag::SubmersionAllConnected:
            j["verdict"] = "SubmersionAllConnected";
            j["rule"] = conn_rule_name(v.rule);
            break;
        case Verdict::Tag::SubmersionDisconnected:
            j["verdict"] = "SubmersionDisconnected";
            j["family"] = v.family->id;
            if (v.family->id == 2 || v.family->id == 4) j["a02"] = v.family->a02.to_string();
            j["hrc"] = v.hrc_description;
            break;
        case Verdict::Tag::Undetermined:
            j["verdict"] = "Undetermined";
            if (v.case_label) j["case"] = quartic_label_name(*v.case_label);
            break;
    }
    if (!v.note.empty()) j["note"] = v.note;
    j["version"] = kVersion;
    return j;
}

ordered_json json_critical(const BPoly& p, const std::optional<WitnessBox>& w) {
    ordered_json j;
    j["command"] = "critical";
    j["input"] = print_poly(p);
    j["exists"] = w.has_value();
    if (w) j["box"] = box_json(*w);
    j["version"] = kVersion;
    return j;
}

ordered_json json_connected(const BPoly& p, const ConnectednessCertificate& cert) {
    ordered_json j;
    j["command"] = "connected";
    j["input"] = print_poly(p);
    j["level"] = cert.level.to_string();
    switch (cert.tag) {
        case ConnectednessCertificate::Tag::ConnectedAllLevels: j["tag"] = "ConnectedAllLevels"; break;
        case ConnectednessCertificate::Tag::ConnectedZeroLevel: j["tag"] = "ConnectedGivenLevel"; break;
        case ConnectednessCertificate::Tag::Undetermined: j["tag"] = "Undetermined"; break;
    }
    if (cert.rule != ConnRule::None) {
        j["rule"] = conn_rule_name(cert.rule);
        j["fiber_var"] = name(cert.fiber_var);
        if (!cert.discriminant.is_zero())
            j["discriminant"] = cert.discriminant.to_string("t");
        j["facts"] = cert.facts;
    }
    j["version"] = kVersion;
    return j;
}

ordered_json json_subres(const BPoly& p, const BPoly& q, Var var, int k, const UPoly& result) {
    ordered_json j;
    j["command"] = "subres";
    j["p"] = print_poly(p);
    j["q"] = print_poly(q);
    j["var"] = name(var);
    j["k"] = k;
    j["result"] = result.to_string(name(other(var)));
    j["version"] = kVersion;
    return j;
}

ordered_json json_refute(const Family& f, const BPoly& q, const RefutationCertificate& cert) {
    ordered_json j = family_json(f);
    j["command"] = "refute";
    j["q"] = print_poly(q);
    if (cert.tag == RefutationCertificate::Tag::PointWitness) {
        j["tag"] = "PointWitness";
        j["point"] = {cert.x.to_string(), cert.y.to_string()};
        j["value"] = cert.value.to_string();
    } else {
        j["tag"] = "DivergenceCertificate";
        j["tau"] = cert.tau;
    }
    j["trace"] = cert.trace;
    j["version"] = kVersion;
    // reorder: command first
    ordered_json out;
    out["command"] = j["command"];
    j.erase("command");
    for (auto& [key, val] : j.items()) out[key] = val;
    return out;
}

ordered_json json_bruna(const std::vector<Rat>& b, const BrunaWitnesses& w) {
    ordered_json j;
    j["command"] = "bruna";
    ordered_json bs = ordered_json::array();
    for (const Rat& r : b) bs.push_back(r.to_string());
    j["b"] = bs;
    j["L"] = l_poly(b).to_string("theta");
    j["is_zero"] = w.is_zero;
    if (w.theta1) j["theta1"] = w.theta1->to_string();
    if (w.theta2) j["theta2"] = w.theta2->to_string();
    j["version"] = kVersion;
    return j;
}

ordered_json json_hankel(int j_, int k, const Rat& det, const std::vector<Rat>* minors) {
    ordered_json j;
    j["command"] = "hankel";
    j["j"] = j_;
    j["k"] = k;
    j["det"] = det.to_string();
    if (minors) {
        ordered_json ms = ordered_json::array();
        for (const Rat& r : *minors) ms.push_back(r.to_string());
        j["minors"] = ms;
    }
    j["version"] = kVersion;
    return j;
}

ordered_json json_hrc_integral(const Family& f, const BPoly& h, const Rat& eps, double value) {
    ordered_json j;
    j["command"] = "hrc-integral";
    for (auto& [key, val] : family_json(f).items()) j[key] = val;
    j["h"] = print_poly(h);
    j["eps"] = eps.to_string();
    j["value"] = value;
    j["region"] = hrc_region(f).description;
    j["version"] = kVersion;
    return j;
}

ordered_json json_tau(const Family& f, const BPoly& h, int t) {
    ordered_json j;
    j["command"] = "tau";
    for (auto& [key, val] : family_json(f).items()) j[key] = val;
    j["h"] = print_poly(h);
    j["tau"] = t;
    j["version"] = kVersion;
    return j;
}

}  // namespace rjc
