// Copyright 2026 The hocu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOCU_KERNEL_H_
#define HOCU_KERNEL_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hocu/colour.h"
#include "hocu/term.h"

namespace hocu {

// Adds `delta` to every bound index >= `cutoff`.
Term shift(const Term& term, int delta, int cutoff = 0);

// body[value/#0], lowering the remaining loose indices by one.
Term instantiate(const Term& body, const Term& value);

Term beta_normalize(const Term& term);

// Eta-long beta-normal form. Colour annotations ride along unchanged.
Term normalize(const Term& term);

// Contracts every \x. M(x) with x not free in M, bottom up. Used for
// display; normalize undoes it.
Term eta_contract(const Term& term);

// True when `term` is beta-normal and every atom is applied to all of its
// arguments with lambdas only at the top of each argument position.
bool is_eta_long_normal(const Term& term);

// lambda x1..xn. head(args), the shape of an eta-long normal term.
struct Spine {
  std::vector<Type> binders;
  std::vector<std::string> hints;
  Term head;
  std::vector<Term> args;
};
Spine spine(const Term& term);
// Head and arguments of a non-lambda term.
Term head_of(const Term& term);
std::vector<Term> args_of(const Term& term);

// Removes every colour annotation.
Term erase(const Term& term);

// Rewrites every annotation with `f`; symbols without one are left alone.
Term map_colours(const Term& term,
                 const std::function<Colour(const Colour&)>& f);

// Calls `visit` for every constant and free-variable occurrence.
void for_each_symbol(const Term& term,
                     const std::function<void(const Term&)>& visit);

// Normalizes both sides and compares them up to alpha-renaming. Ground
// annotations compare by logical equivalence over `alphabet`; a colour
// variable is equal only to itself; an annotated symbol never equals an
// unannotated one, unless `unannotated_constants_match` lets an unannotated
// constant stand for any colour of the same constant.
bool alpha_beta_eta_equal(const Term& a, const Term& b,
                          const ColourAlphabet& alphabet,
                          bool unannotated_constants_match = false);

// Asserts annotation |= colour for every annotated symbol of `term`; bound
// variables and unannotated symbols impose nothing.
std::optional<ColourStore> monochrome_constraints(
    const Term& term, const Colour& colour, const ColourStore& store,
    const ColourAlphabet& alphabet);

}  // namespace hocu

#endif  // HOCU_KERNEL_H_
