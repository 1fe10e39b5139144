/**
 * JSON formats for quivers, weights, parameters, modules, groups and
 * partitions. Scalars are strings in the scalar grammar; positions and
 * adjacent generators are 1-based.
 */
#ifndef WREATH_IO_HPP
#define WREATH_IO_HPP

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "wreath/module.hpp"
#include "wreath/sra.hpp"

namespace wreath {

using nlohmann::json;

struct FormatError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

json read_json_file(const std::string& path);
/** Canonical text: two-space indentation, sorted keys, trailing newline. */
std::string dump_canonical(const json& j);
void write_text_file(const std::string& path, const std::string& text);

Quiver quiver_from_json(const json& j);
json quiver_to_json(const Quiver& q);

Weight weight_from_json(const Quiver& q, const json& j, int m);
json weight_to_json(const Quiver& q, const Weight& lambda);

/** `{"n":2,"lambda":{...},"nu":"0","cyclotomic_order":1}` */
Params params_from_json(const Quiver& q, const json& j);
json params_to_json(const Params& p);

Tuple tuple_from_json(const Quiver& q, const json& j);
json tuple_to_json(const Quiver& q, const Tuple& t);

Mat matrix_from_json(const json& j, int m);
json matrix_to_json(const Mat& a);

WreathModule module_from_json(const Quiver& q, const json& j);
json module_to_json(const WreathModule& v);

Partition partition_from_json(const json& j);

/**
 * `{"type":"cyclic","m":3}` or
 * `{"type":"table","order":4,"m":4,"identity":"1","table":{"1":["1","1",...],...}}`
 * where each table entry lists the character values at one element in vertex order.
 */
GammaData gamma_from_json(const json& j);

SraParams sra_params_from_json(const GammaData& g, const json& j);

}   // namespace wreath

#endif
