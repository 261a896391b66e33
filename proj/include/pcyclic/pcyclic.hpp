#pragma once

#include "pcyclic/audit.hpp"
#include "pcyclic/code.hpp"
#include "pcyclic/constructions.hpp"
#include "pcyclic/cyclotomic.hpp"
#include "pcyclic/distance.hpp"
#include "pcyclic/ext_field.hpp"
#include "pcyclic/factorization.hpp"
#include "pcyclic/json_io.hpp"
#include "pcyclic/parallel.hpp"
#include "pcyclic/prime_field.hpp"
