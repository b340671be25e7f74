#pragma once

#include "wcifano/isolating.hpp"
#include "wcifano/lxy.hpp"
#include "wcifano/rational.hpp"
#include "wcifano/wps.hpp"

#include <string>
#include <vector>

namespace wcifano {

struct BasketEntry {
    long long r = 0, a = 0;
    int count = 0;
    std::vector<std::string> marks;  // subset of {"QI","EI","d"}
};

// A quotient point with a Sarkisov-link mark (QI/EI) and its location on
// L_xy in the normal-form coordinates.
struct QieiPoint {
    long long r = 0, a = 0;
    std::string point;  // "p_z".."p_u"
};

struct Family {
    int no = 0;
    std::vector<long long> weights;  // 6 entries, ascending
    std::vector<long long> degrees;  // 2 entries, d1 <= d2
    Rational A3;
    std::string klass;             // "F(i)" or "F(ii)"
    std::string expected_verdict;  // "lct_equals_1" or "lct_on_Xcirc_equals_1"
    std::vector<BasketEntry> basket;
    std::vector<StratumEntry> strata;
    LxyRecord lxy;
    std::vector<DistinguishedConfig> distinguished;
    std::vector<QieiPoint> qiei_points;
    std::vector<std::string> assumptions;

    WCIShape shape() const { return WCIShape{weights, degrees}; }
};

struct Database {
    std::string version;
    std::vector<Family> families;  // ordered by family number
};

// Throws ParseError on malformed JSON, SchemaError on missing/ill-typed
// fields (message names the family and field), CrossRefError on
// inconsistencies between sections (e.g. a distinguished configuration whose
// type has no d-marked basket entry).
Database load_db(const std::string& path);
Database load_db_string(const std::string& text);

// Canonical serialization; load_db_string(serialize_db(db)) round-trips and
// serialize_db is a fixpoint on its own output.
std::string serialize_db(const Database& db);

const Family* find_family(const Database& db, int no);

// Deep structural validation beyond load-time checks: recomputes A^3,
// basket, classification and distinguished configurations, verifies all
// stratum entries and the L_xy records.  Returns human-readable violations.
std::vector<std::string> validate_db(const Database& db);

// Resolves the database path: explicit flag value if nonempty, else the
// WCIFANO_DB environment variable, else "./data/families.json".
std::string resolve_db_path(const std::string& flag_value);

} // namespace wcifano
