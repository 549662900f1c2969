#pragma once

#include "lgrp/error.hpp"
#include "lgrp/lattice.hpp"
#include "lgrp/group.hpp"
#include "lgrp/lsubset.hpp"
#include "lgrp/hom.hpp"
#include "lgrp/lsubgroup.hpp"
#include "lgrp/maximality.hpp"
#include "lgrp/frattini.hpp"
#include "lgrp/json_io.hpp"
#include "lgrp/dot.hpp"
#include "lgrp/harness.hpp"
