#pragma once

#include "holecov/assignment.hpp"
#include "holecov/coverage_oracle.hpp"
#include "holecov/error.hpp"
#include "holecov/geometry.hpp"
#include "holecov/healing.hpp"
#include "holecov/hole_analysis.hpp"
#include "holecov/io.hpp"
#include "holecov/pipeline.hpp"
#include "holecov/predicates.hpp"
#include "holecov/random.hpp"
#include "holecov/sensor_field.hpp"
#include "holecov/svg.hpp"
#include "holecov/triangulation.hpp"
