#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "satlab/orders/order.hpp"

namespace satlab::orders {

// Descriptor grammar:
//   D := fin:N | rev(D) | sum(D,D) | prod(D,D) | lexpow(D,ORD,T) | tern
// Term grammar (directed by the descriptor):
//   fin:N       -> index                      e.g. 3
//   rev(D)      -> rev(T)
//   sum(D,E)    -> l(T) | r(T)
//   prod(D,E)   -> (T,T)
//   lexpow(...) -> {ORD:T,...}                e.g. {0:1,w+2:0}
//   tern        -> tern{N:+,N:-,...}          e.g. tern{0:+,2:-}
// Whitespace is ignored. Errors are ParseError.
OrderDesc parse_desc(std::string_view text);
OrderTerm parse_term(const OrderDesc& desc, std::string_view text);
// Semicolon-separated list of terms; empty text is the empty list.
std::vector<OrderTerm> parse_term_list(const OrderDesc& desc, std::string_view text);

std::string format_desc(const OrderDesc& desc);
std::string format_term(const OrderTerm& term);
std::string format_term_list(const std::vector<OrderTerm>& terms);

}  // namespace satlab::orders
