#ifndef SMISO_SMISO_HPP
#define SMISO_SMISO_HPP

#include "smiso/census.hpp"
#include "smiso/errors.hpp"
#include "smiso/fixtures.hpp"
#include "smiso/isotopism_group.hpp"
#include "smiso/isotopy.hpp"
#include "smiso/magma.hpp"
#include "smiso/permutation.hpp"
#include "smiso/random.hpp"
#include "smiso/smarandache.hpp"
#include "smiso/table_io.hpp"

#endif  // SMISO_SMISO_HPP
