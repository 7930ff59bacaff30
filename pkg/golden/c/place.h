// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

#ifndef KNOW_PLACE_H
#define KNOW_PLACE_H

#include <stdbool.h>
#include <stddef.h>

/* Place */
#define KNOW_PLACE_TYPE_IRI "https://know.dev/Place"

typedef struct Place {
    const char *id;
} Place;

#endif /* KNOW_PLACE_H */
