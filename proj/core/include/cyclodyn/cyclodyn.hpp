#pragma once

#include "cyclodyn/bounds.hpp"
#include "cyclodyn/canonical_forms.hpp"
#include "cyclodyn/cyclo_field.hpp"
#include "cyclodyn/cyclotomic.hpp"
#include "cyclodyn/dynamics.hpp"
#include "cyclodyn/embedding.hpp"
#include "cyclodyn/errors.hpp"
#include "cyclodyn/interval.hpp"
#include "cyclodyn/laurent.hpp"
#include "cyclodyn/parse.hpp"
#include "cyclodyn/poly.hpp"
#include "cyclodyn/radicals.hpp"
#include "cyclodyn/rational.hpp"
#include "cyclodyn/roots.hpp"
#include "cyclodyn/system.hpp"
