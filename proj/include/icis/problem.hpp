#pragma once

#include "icis/error.hpp"
#include "icis/family.hpp"
#include "icis/polynomial.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace icis {

enum class ProblemKind { Milnor, IcisMilnor, FunctionMilnor, Discriminant, GenericLine, FamilyAnalyze, GreuelCheck };

std::string_view kind_name(ProblemKind kind);
std::optional<ProblemKind> kind_from_name(std::string_view name);

struct SourcePosition {
    int line = 1;
    int column = 1;
};

/// `name = expr, expr, ...;`
struct Binding {
    std::string name;
    std::vector<Polynomial> values;
    SourcePosition position;
};

struct ProblemFile {
    RingPtr ring;
    std::optional<std::string> parameter;
    ProblemKind kind = ProblemKind::Milnor;
    SourcePosition kind_position;
    std::vector<Binding> bindings;
    std::vector<Rational> samples{Rational(1), Rational(1, 2)};
    std::uint64_t seed = 0;
    std::uint64_t budget = 1'000'000;
    std::optional<std::vector<Rational>> direction;
    std::vector<std::string> targets;
    std::vector<CurveProbe> probes;

    const Binding* find(std::string_view name) const;
};

/// Parses and validates a problem file. Throws ParseError carrying one of
/// Syntax, UnboundName, MissingParameter, MissingBinding or UnknownKind.
ProblemFile parse_problem(std::string_view text);

/// A single polynomial expression over `ring`.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Reloads a problem file from disk. Throws Error(Io).
std::string read_problem_text(const std::string& path);

struct RunOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::vector<Rational>> samples;
    std::optional<std::uint64_t> budget;
};

void apply_overrides(ProblemFile& problem, const RunOverrides& overrides);

enum ExitStatus : int { kExitComputed = 0, kExitInconclusive = 2, kExitInputError = 3, kExitBudget = 4 };

/// Ordered record of inputs, results with provenance, verdicts and budget
/// use. No timing is stored, so equal inputs give equal bytes.
struct Report {
    nlohmann::ordered_json data;
    int exit_status = kExitComputed;
};

Report run(const ProblemFile& problem);
/// Report for a failure that happened before or while running.
Report error_report(const Error& error, std::optional<ProblemKind> kind = std::nullopt);

std::string render_text(const Report& report);
std::string render_json(const Report& report);

int exit_status_for(ErrorCode code);

}  // namespace icis
