// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

#ifndef KNOW_LANDMARK_H
#define KNOW_LANDMARK_H

#include <stdbool.h>
#include <stddef.h>

/* Landmark */
#define KNOW_LANDMARK_TYPE_IRI "https://know.dev/Landmark"

typedef struct Landmark {
    const char *id;
} Landmark;

#endif /* KNOW_LANDMARK_H */
