// Umbrella header for the core library (no I/O dependencies).
#pragma once

#include <brlb/certificates/algebra111.hpp>
#include <brlb/certificates/battery.hpp>
#include <brlb/certificates/obstruction.hpp>
#include <brlb/certificates/strassen.hpp>
#include <brlb/errors.hpp>
#include <brlb/exponent/exponent.hpp>
#include <brlb/koszul/koszul.hpp>
#include <brlb/linalg/field.hpp>
#include <brlb/linalg/linalg.hpp>
#include <brlb/linalg/matrix.hpp>
#include <brlb/linalg/random.hpp>
#include <brlb/tensor/binding.hpp>
#include <brlb/tensor/eps_decomposition.hpp>
#include <brlb/tensor/polarize.hpp>
#include <brlb/tensor/tensor.hpp>
#include <brlb/zoo/zoo.hpp>
