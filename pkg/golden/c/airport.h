// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

#ifndef KNOW_AIRPORT_H
#define KNOW_AIRPORT_H

#include <stdbool.h>
#include <stddef.h>

/* Airport */
#define KNOW_AIRPORT_TYPE_IRI "https://know.dev/Airport"

typedef struct Airport {
    const char *id;
} Airport;

#endif /* KNOW_AIRPORT_H */
